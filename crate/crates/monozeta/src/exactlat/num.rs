//! Small exact-integer helpers shared by the lattice-geometry code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// gcd of all entries, always non-negative; 0 for the zero vector.
pub fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    g
}

/// Divides out the content, preserving direction. Zero vectors stay zero.
pub fn primitivize(v: &[BigInt]) -> Vec<BigInt> {
    let g = content(v);
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn is_primitive(v: &[BigInt]) -> bool {
    use num_traits::One;
    content(v).is_one()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn neg_vec(v: &[BigInt]) -> Vec<BigInt> {
    v.iter().map(|x| -x).collect()
}

pub fn sub_vec(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_vec(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn all_nonneg(v: &[BigInt]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn vec_i64(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Checked conversion used when exact BigInt results feed fixed-width counters.
pub fn to_i64(x: &BigInt, what: &'static str) -> crate::error::Result<i64> {
    use num_traits::ToPrimitive;
    x.to_i64().ok_or(crate::error::Error::Overflow(what))
}
