use std::fmt;

use num_bigint::BigInt;

use super::num;

/// A point of the integer lattice Z^n. Ordering is lexicographic on coordinates,
/// which is the canonical order used for every vertex/face listing in this crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(pub Vec<BigInt>);

/// Integer direction vector; same representation as a point, different role.
pub type LatticeVector = LatticePoint;

/// An integral linear functional on Z^n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Covector(pub Vec<BigInt>);

impl LatticePoint {
    pub fn zero(n: usize) -> Self {
        LatticePoint(vec![BigInt::from(0); n])
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        LatticePoint(num::vec_i64(v))
    }

    pub fn ambient_dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        num::is_zero_vec(&self.0)
    }
}

impl Covector {
    pub fn zero(n: usize) -> Self {
        Covector(vec![BigInt::from(0); n])
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        Covector(num::vec_i64(v))
    }

    pub fn ambient_dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        num::is_zero_vec(&self.0)
    }

    pub fn is_primitive(&self) -> bool {
        num::is_primitive(&self.0)
    }

    pub fn primitivized(&self) -> Covector {
        Covector(num::primitivize(&self.0))
    }

    pub fn negated(&self) -> Covector {
        Covector(num::neg_vec(&self.0))
    }

    /// Pairing <u, p>.
    pub fn eval(&self, p: &LatticePoint) -> BigInt {
        num::dot(&self.0, &p.0)
    }
}

fn fmt_vec(coords: &[BigInt], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_vec(&self.0, f)
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_vec(&self.0, f)
    }
}
