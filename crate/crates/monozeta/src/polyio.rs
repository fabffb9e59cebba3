//! Polynomial data model: exact rational coefficients over named variables,
//! a small expression parser, and support/restriction utilities.
//!
//! The parser accepts the grammar
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | var ('^' nat)? | '(' expr ')'
//! rational := int ('/' nat)?
//! ```
//!
//! with whitespace ignored. There is no implicit multiplication: write
//! `3*x`, not `3x`. Parenthesized subexpressions are expanded into the
//! canonical term map, so `x*(x^2*y^2 - 1)` and `x^3*y^2 - x` parse to the
//! same polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::{Error as _, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactlat::LatticePoint;

/// Polynomial with exact rational coefficients. Every exponent vector has
/// length `vars.len()`; zero coefficients are never stored, so the zero
/// polynomial is the empty term map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u64>, BigRational>,
}

impl Polynomial {
    /// Builds a polynomial from raw terms, merging duplicates and dropping
    /// coefficients that cancel to zero.
    pub fn new(
        vars: Vec<String>,
        terms: impl IntoIterator<Item = (Vec<u64>, BigRational)>,
    ) -> Result<Self> {
        let n = vars.len();
        let mut map: BTreeMap<Vec<u64>, BigRational> = BTreeMap::new();
        for (exp, coeff) in terms {
            if exp.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: exp.len(),
                });
            }
            let entry = map.entry(exp).or_insert_with(BigRational::zero);
            *entry += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Polynomial { vars, terms: map })
    }

    pub fn zero(vars: Vec<String>) -> Self {
        Polynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u64>, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the polynomial has no term besides (possibly) the constant.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Exponent vectors carrying a nonzero coefficient, as lattice points.
    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms
            .keys()
            .map(|e| LatticePoint(e.iter().map(|&x| BigInt::from(x)).collect()))
            .collect()
    }

    /// Coefficient of the zero exponent vector (0 if absent).
    pub fn constant_term(&self) -> BigRational {
        let zero_exp = vec![0u64; self.vars.len()];
        self.terms
            .get(&zero_exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// The pair (supp(f), a) with a the constant term.
    pub fn support_and_constant(&self) -> (Vec<LatticePoint>, BigRational) {
        (self.support(), self.constant_term())
    }

    /// f - c. With c the constant term this is the usual `f - a`.
    pub fn sub_constant(&self, c: &BigRational) -> Polynomial {
        let mut out = self.clone();
        let zero_exp = vec![0u64; self.vars.len()];
        let entry = out
            .terms
            .entry(zero_exp.clone())
            .or_insert_with(BigRational::zero);
        *entry -= c;
        if out.terms.get(&zero_exp).is_some_and(|v| v.is_zero()) {
            out.terms.remove(&zero_exp);
        }
        out
    }

    /// f_S: keeps exactly the terms whose exponent vector vanishes outside
    /// the 0-indexed subset `s`.
    pub fn restrict_to_subset(&self, s: &[usize]) -> Polynomial {
        let keep = |exp: &Vec<u64>| {
            exp.iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || s.contains(&i))
        };
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Relabels variables by a permutation: old variable `i` becomes variable
    /// `perm[i]` (exponents move, the name list stays fixed).
    pub fn permute_vars(&self, perm: &[usize]) -> Result<Polynomial> {
        let n = self.vars.len();
        if perm.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: perm.len(),
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut exp = vec![0u64; n];
                for (i, &j) in perm.iter().enumerate() {
                    exp[j] = e[i];
                }
                (exp, c.clone())
            })
            .collect();
        Ok(Polynomial {
            vars: self.vars.clone(),
            terms,
        })
    }
}

fn add_maps(
    a: &mut BTreeMap<Vec<u64>, BigRational>,
    b: BTreeMap<Vec<u64>, BigRational>,
    negate: bool,
) {
    for (exp, coeff) in b {
        let entry = a.entry(exp.clone()).or_insert_with(BigRational::zero);
        if negate {
            *entry -= coeff;
        } else {
            *entry += coeff;
        }
        if a.get(&exp).is_some_and(|v| v.is_zero()) {
            a.remove(&exp);
        }
    }
}

fn mul_maps(
    a: &BTreeMap<Vec<u64>, BigRational>,
    b: &BTreeMap<Vec<u64>, BigRational>,
) -> Result<BTreeMap<Vec<u64>, BigRational>> {
    let mut out: BTreeMap<Vec<u64>, BigRational> = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exp: Vec<u64> = ea
                .iter()
                .zip(eb)
                .map(|(&x, &y)| x.checked_add(y).ok_or(Error::Overflow("exponent addition")))
                .collect::<Result<_>>()?;
            let entry = out.entry(exp.clone()).or_insert_with(BigRational::zero);
            *entry += ca * cb;
            if out.get(&exp).is_some_and(|v| v.is_zero()) {
                out.remove(&exp);
            }
        }
    }
    Ok(out)
}

/// Parses `text` over the given ordered variable list.
pub fn parse_polynomial(text: &str, vars: &[String]) -> Result<Polynomial> {
    let mut p = Parser {
        text: text.as_bytes(),
        pos: 0,
        vars,
    };
    let map = p.expr()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return Err(p.err("unexpected character"));
    }
    Ok(Polynomial {
        vars: vars.to_vec(),
        terms: map,
    })
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .text
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<BTreeMap<Vec<u64>, BigRational>> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            add_maps(&mut acc, rhs, op == b'-');
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BTreeMap<Vec<u64>, BigRational>> {
        let mut acc = self.factor()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = mul_maps(&acc, &rhs)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BTreeMap<Vec<u64>, BigRational>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == b'-' => self.rational(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.variable(),
            _ => Err(self.err("expected a number, variable, or `(`")),
        }
    }

    fn rational(&mut self) -> Result<BTreeMap<Vec<u64>, BigRational>> {
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let num = self.digits("integer")?;
        let num = if neg { -num } else { num };
        let den = if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let d = self.digits("denominator")?;
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            d
        } else {
            BigInt::one()
        };
        let coeff = BigRational::new(num, den);
        let mut map = BTreeMap::new();
        if !coeff.is_zero() {
            map.insert(vec![0u64; self.vars.len()], coeff);
        }
        Ok(map)
    }

    fn digits(&mut self, what: &str) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.text.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err(format!("expected {what} digits")));
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit string"))
    }

    fn variable(&mut self) -> Result<BTreeMap<Vec<u64>, BigRational>> {
        self.skip_ws();
        let start = self.pos;
        while self
            .text
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii identifier");
        let Some(idx) = self.vars.iter().position(|v| v == name) else {
            self.pos = start;
            return Err(self.err(format!("unknown variable `{name}`")));
        };
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits("nonnegative exponent")?;
            u64::try_from(&digits).map_err(|_| self.err("exponent too large"))?
        } else {
            1
        };
        let mut e = vec![0u64; self.vars.len()];
        e[idx] = exp;
        let mut map = BTreeMap::new();
        map.insert(e, BigRational::one());
        Ok(map)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (exp, coeff)) in self.terms.iter().enumerate() {
            let neg = coeff.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = coeff.abs();
            let monomial: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            if monomial.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exp: &'a [u64],
            num: i64,
            den: i64,
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (exp, coeff) in &self.terms {
            let num = i64::try_from(coeff.numer())
                .map_err(|_| S::Error::custom("coefficient numerator exceeds i64"))?;
            let den = i64::try_from(coeff.denom())
                .map_err(|_| S::Error::custom("coefficient denominator exceeds i64"))?;
            terms.push(Term { exp, num, den });
        }
        let mut s = serializer.serialize_struct("Polynomial", 2)?;
        s.serialize_field("vars", &self.vars)?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            exp: Vec<u64>,
            num: i64,
            den: i64,
        }
        #[derive(Deserialize)]
        struct Raw {
            vars: Vec<String>,
            terms: Vec<Term>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let terms: Vec<(Vec<u64>, BigRational)> = raw
            .terms
            .into_iter()
            .map(|t| {
                if t.den == 0 {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok((t.exp, BigRational::new(t.num.into(), t.den.into())))
            })
            .collect::<std::result::Result<_, _>>()?;
        Polynomial::new(raw.vars, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parse_examples() {
        let f = parse_polynomial("x - x^2*y", &vars(&["x", "y"])).unwrap();
        assert_eq!(
            f.terms().iter().collect::<Vec<_>>(),
            vec![(&vec![1, 0], &rat(1, 1)), (&vec![2, 1], &rat(-1, 1))]
        );

        let g = parse_polynomial("3/2*x^2 + y - y", &vars(&["x", "y"])).unwrap();
        assert_eq!(
            g.terms().iter().collect::<Vec<_>>(),
            vec![(&vec![2, 0], &rat(3, 2))]
        );

        let h = parse_polynomial("x1*(x1^2*x2^2 - 1)", &vars(&["x1", "x2"])).unwrap();
        assert_eq!(
            h.terms().iter().collect::<Vec<_>>(),
            vec![(&vec![1, 0], &rat(-1, 1)), (&vec![3, 2], &rat(1, 1))]
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = parse_polynomial("x + * y", &vars(&["x", "y"])).unwrap_err();
        assert!(matches!(e, Error::Parse { pos: 4, .. }), "{e}");

        let e = parse_polynomial("x + z", &vars(&["x", "y"])).unwrap_err();
        assert!(e.to_string().contains("unknown variable `z`"), "{e}");

        let e = parse_polynomial("x^-2", &vars(&["x"])).unwrap_err();
        assert!(e.to_string().contains("exponent"), "{e}");

        let e = parse_polynomial("1/0*x", &vars(&["x"])).unwrap_err();
        assert!(e.to_string().contains("zero denominator"), "{e}");

        // No implicit multiplication.
        let e = parse_polynomial("3x", &vars(&["x"])).unwrap_err();
        assert!(matches!(e, Error::Parse { pos: 1, .. }), "{e}");
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn display_round_trips() {
        let v = vars(&["x", "y"]);
        for text in [
            "x - x^2*y",
            "-2*x + 3/2*y^4 - 5",
            "7",
            "0",
            "x*y - x - y + 1",
        ] {
            let f = parse_polynomial(text, &v).unwrap();
            let again = parse_polynomial(&f.to_string(), &v).unwrap();
            assert_eq!(f, again, "render was `{f}`");
        }
    }

    #[test]
    fn support_and_constant_examples() {
        let v = vars(&["x", "y"]);
        let f = parse_polynomial("x - x^2*y", &v).unwrap();
        let (supp, a) = f.support_and_constant();
        assert_eq!(supp.len(), 2);
        assert!(a.is_zero());

        let g = parse_polynomial("x^2 + y^3 + 5", &v).unwrap();
        let (supp, a) = g.support_and_constant();
        assert_eq!(supp.len(), 3);
        assert_eq!(a, rat(5, 1));
        assert!(g.sub_constant(&a).constant_term().is_zero());

        let c = parse_polynomial("7", &v).unwrap();
        assert!(c.is_constant());
        assert_eq!(c.constant_term(), rat(7, 1));
    }

    #[test]
    fn restriction() {
        let v = vars(&["x", "y"]);
        let f = parse_polynomial("x - x^2*y", &v).unwrap();
        assert_eq!(f.restrict_to_subset(&[0]).to_string(), "x");
        assert!(f.restrict_to_subset(&[1]).is_zero());
        assert_eq!(f.restrict_to_subset(&[0, 1]), f);

        // restrict(restrict(f, S), S') == restrict(f, S ∩ S')
        let g = parse_polynomial("x*y + x + y + 1", &v).unwrap();
        assert_eq!(
            g.restrict_to_subset(&[0]).restrict_to_subset(&[1]),
            g.restrict_to_subset(&[])
        );
    }

    #[test]
    fn permutation() {
        let v = vars(&["x", "y"]);
        let f = parse_polynomial("x - x^2*y", &v).unwrap();
        let g = f.permute_vars(&[1, 0]).unwrap();
        assert_eq!(g.to_string(), "y - x*y^2");
    }

    #[test]
    fn json_round_trip() {
        let f = parse_polynomial("x - 3/2*x^2*y", &vars(&["x", "y"])).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"vars":["x","y"],"terms":[{"exp":[1,0],"num":1,"den":1},{"exp":[2,1],"num":-3,"den":2}]}"#
        );
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(f, back);
    }
}
