//! Zeta-function algebra and the single-polynomial formulas: monodromy zeta
//! at infinity, zeta functions along fibers, Varchenko's local zeta, Euler
//! characteristics via lattice volumes, Lefschetz numbers, and the jumping
//! number of the Euler characteristic at the constant-term value.
//!
//! A [`ZetaFunction`] is kept in factored form `prod (1-t^d)^e` and never
//! expanded; degree and Lefschetz numbers are derived views.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::exactlat::{mixed_volume, supporting_face, volume_as_dim, Covector, Polytope, Sense};
use crate::newton::{
    bif_compact_facets, check_condition_star, convenience_profile, faces_at_infinity,
    gamma_infinity, newton_polytope_minus_constant, relevant_subsets, FaceClass,
};
use crate::polyio::Polynomial;

/// A monodromy zeta function in cyclotomic-product form: the map d -> e_d
/// representing `prod_d (1-t^d)^{e_d}`. The empty map is the constant 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZetaFunction {
    factors: BTreeMap<u64, BigInt>,
}

impl ZetaFunction {
    pub fn one() -> Self {
        ZetaFunction::default()
    }

    /// The single factor `(1-t^d)^e`.
    pub fn factor(d: u64, e: impl Into<BigInt>) -> Self {
        let mut z = ZetaFunction::one();
        z.mul_factor(d, e.into());
        z
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &BTreeMap<u64, BigInt> {
        &self.factors
    }

    /// Multiplies by `(1-t^d)^e` in place. Exponents that cancel to zero are
    /// dropped so the map stays canonical.
    pub fn mul_factor(&mut self, d: u64, e: BigInt) {
        assert!(d > 0, "factor (1-t^d) needs d > 0");
        if e.is_zero() {
            return;
        }
        let slot = self.factors.entry(d).or_insert_with(BigInt::zero);
        *slot += e;
        if slot.is_zero() {
            self.factors.remove(&d);
        }
    }

    pub fn multiply(&self, rhs: &ZetaFunction) -> ZetaFunction {
        let mut out = self.clone();
        for (&d, e) in &rhs.factors {
            out.mul_factor(d, e.clone());
        }
        out
    }

    pub fn power(&self, k: i64) -> ZetaFunction {
        let mut out = ZetaFunction::one();
        for (&d, e) in &self.factors {
            out.mul_factor(d, e * k);
        }
        out
    }

    /// degree in t: sum of d * e_d.
    pub fn degree(&self) -> BigInt {
        self.factors
            .iter()
            .map(|(&d, e)| BigInt::from(d) * e)
            .sum()
    }
}

impl fmt::Display for ZetaFunction {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return out.write_str("1");
        }
        for (&d, e) in &self.factors {
            if d == 1 {
                out.write_str("(1-t)")?;
            } else {
                write!(out, "(1-t^{})", d)?;
            }
            if !e.is_one() {
                write!(out, "^{}", e)?;
            }
        }
        Ok(())
    }
}

impl Serialize for ZetaFunction {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        struct Factors<'a>(&'a BTreeMap<u64, BigInt>);
        impl Serialize for Factors<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
                use serde::ser::Error as _;
                let mut seq = ser.serialize_seq(Some(self.0.len()))?;
                for (&d, e) in self.0 {
                    let e = i64::try_from(e)
                        .map_err(|_| S::Error::custom("zeta exponent exceeds i64"))?;
                    #[derive(serde::Serialize)]
                    struct Factor {
                        d: u64,
                        exponent: i64,
                    }
                    seq.serialize_element(&Factor { d, exponent: e })?;
                }
                seq.end()
            }
        }
        use serde::ser::Error as _;
        let degree = i64::try_from(&self.degree())
            .map_err(|_| S::Error::custom("zeta degree exceeds i64"))?;
        let mut st = ser.serialize_struct("ZetaFunction", 3)?;
        st.serialize_field("factors", &Factors(&self.factors))?;
        st.serialize_field("degree", &degree)?;
        st.serialize_field("display", &self.to_string())?;
        st.end()
    }
}

pub fn zeta_multiply(a: &ZetaFunction, b: &ZetaFunction) -> ZetaFunction {
    a.multiply(b)
}

pub fn zeta_power(a: &ZetaFunction, k: i64) -> ZetaFunction {
    a.power(k)
}

pub fn zeta_degree(a: &ZetaFunction) -> BigInt {
    a.degree()
}

pub fn zeta_display(a: &ZetaFunction) -> String {
    a.to_string()
}

/// Local data of an isolated singular point of a fiber: its local monodromy
/// zeta function and Milnor number. For the 2-variable jumping formula the
/// two are tied by mu = 1 - deg(local_zeta) (Cor 4.5).
#[derive(Clone, Debug)]
pub struct SingularDatum {
    pub local_zeta: ZetaFunction,
    pub milnor_number: u64,
}

fn require_nonconstant(f: &Polynomial) -> Result<()> {
    if f.is_constant() {
        return Err(Error::precondition(
            "expected a non-constant polynomial; a constant map has no monodromy data",
        ));
    }
    Ok(())
}

fn subset_sign(len: usize) -> BigInt {
    if len % 2 == 1 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub(crate) fn distance_u64(v: &BigInt) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow("lattice distance"))
}

/// Monodromy zeta function at infinity: the product over all subsets S of
/// `(1-t^d)^{(-1)^(#S-1) Vol}` over the faces at infinity of the restriction
/// to S. Requires condition (*); non-degeneracy at infinity (Def 3.3) is
/// asserted by the caller.
pub fn zeta_at_infinity(f: &Polynomial) -> Result<ZetaFunction> {
    require_nonconstant(f)?;
    check_condition_star(f)?;
    let mut z = ZetaFunction::one();
    for s in relevant_subsets(f) {
        let sign = subset_sign(s.len());
        for face in faces_at_infinity(f, &s)?.faces {
            z.mul_factor(distance_u64(&face.value)?, &sign * &face.norm_volume);
        }
    }
    Ok(z)
}

/// Lefschetz numbers L^k of the monodromy represented by a factored zeta:
/// L^k = sum over d dividing k of d * e_d.
pub fn lefschetz_numbers(z: &ZetaFunction, kmax: u64) -> Vec<BigInt> {
    (1..=kmax)
        .map(|k| {
            z.factors
                .iter()
                .filter(|(&d, _)| k % d == 0)
                .map(|(&d, e)| BigInt::from(d) * e)
                .sum()
        })
        .collect()
}

/// Euler characteristic of the generic fiber: the degree of the zeta
/// function at infinity.
pub fn euler_generic_fiber(f: &Polynomial) -> Result<BigInt> {
    Ok(zeta_at_infinity(f)?.degree())
}

pub(crate) fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    // all (a_1..a_parts) with a_i >= 1 summing to total
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Euler characteristic of a non-degenerate complete intersection of p
/// hypersurfaces with the given Newton polytopes inside the n-torus:
/// `(-1)^(n-p)` times the sum of normalized mixed volumes over all ways of
/// distributing n slots among the p polytopes with every polytope used.
pub fn bkk_euler(polytopes: &[Polytope], n: usize) -> Result<BigInt> {
    let p = polytopes.len();
    if p == 0 || p > n {
        return Err(Error::precondition(format!(
            "the torus Euler characteristic needs 1 <= p <= n polytopes (Thm 2.12), got p = {}, n = {}",
            p, n
        )));
    }
    for body in polytopes {
        if body.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: body.ambient_dim(),
            });
        }
    }
    let mut total = BigInt::zero();
    for comp in compositions(n, p) {
        let mut bodies: Vec<Polytope> = Vec::with_capacity(n);
        for (body, &reps) in polytopes.iter().zip(&comp) {
            for _ in 0..reps {
                bodies.push(body.clone());
            }
        }
        total += mixed_volume(&bodies)?;
    }
    if (n - p) % 2 == 1 {
        total = -total;
    }
    Ok(total)
}

fn product_over_classes(
    f: &Polynomial,
    keep: impl Fn(FaceClass) -> bool,
) -> Result<ZetaFunction> {
    let mut z = ZetaFunction::one();
    for s in relevant_subsets(f) {
        let sign = subset_sign(s.len());
        let report = bif_compact_facets(f, &s)?;
        let classes = report.classification.expect("bifurcation reports carry classes");
        for (face, class) in report.faces.iter().zip(classes) {
            if keep(class) {
                z.mul_factor(distance_u64(&face.value)?, &sign * &face.norm_volume);
            }
        }
    }
    Ok(z)
}

/// Varchenko's formula for the local monodromy zeta function of f - a at the
/// origin: the product over the compact facets of the bifurcation polyhedra
/// whose normals are interior to the nonnegative orthant (Eq 4.42). Strict
/// non-degeneracy along the central fiber is asserted by the caller.
pub fn varchenko_local_zeta(f: &Polynomial) -> Result<ZetaFunction> {
    require_nonconstant(f)?;
    product_over_classes(f, |c| c == FaceClass::Interior)
}

/// The quotient zeta at the constant-term value a relating the full zeta to
/// its finite part: `zeta_f^a = correction_factor(f) * finite part`
/// (Thm 4.11). The product runs over compact facets whose normals leave the
/// nonnegative orthant. Requires f - a quasi-convenient.
pub fn correction_factor(f: &Polynomial) -> Result<ZetaFunction> {
    require_nonconstant(f)?;
    if !convenience_profile(f).quasi_convenient {
        return Err(Error::precondition(
            "the correction factor requires f - a to be quasi-convenient (Thm 4.11)",
        ));
    }
    product_over_classes(f, |c| c == FaceClass::Outside)
}

/// chi of the hypersurface of f - a inside the S-torus in smooth mode: by
/// the torus Euler formula this is `(-1)^(#S-1)` times the #S-dimensional
/// normalized volume of the restricted Newton polytope (0 when degenerate).
fn chi_subset_smooth(f: &Polynomial, s: &[usize]) -> Result<BigInt> {
    let np = newton_polytope_minus_constant(f, s)?;
    Ok(subset_sign(s.len()) * volume_as_dim(&np, s.len())?)
}

/// The finite part of the central-fiber zeta in smooth mode (Eq 4.44): the
/// interior-and-axis facet product times `(1-t)^{chi_S}` over all subsets.
/// Requires f - a quasi-convenient; strict non-degeneracy and smoothness of
/// the fiber in every subtorus are asserted by the caller.
pub fn zeta_finite_part_smooth(f: &Polynomial) -> Result<ZetaFunction> {
    require_nonconstant(f)?;
    if !convenience_profile(f).quasi_convenient {
        return Err(Error::precondition(
            "the finite-part expansion requires f - a to be quasi-convenient (Thm 4.11)",
        ));
    }
    let mut z = product_over_classes(f, |c| c != FaceClass::Outside)?;
    for s in relevant_subsets(f) {
        z.mul_factor(1, chi_subset_smooth(f, &s)?);
    }
    Ok(z)
}

/// Which formula computes the central-fiber zeta: `A` expands per subset
/// over all compact facets (Thm 4.8(i)), `B` multiplies the correction
/// factor with the finite part (Thm 4.11). They agree whenever both apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    A,
    B,
}

/// Monodromy zeta function along the central fiber f^{-1}(a), a being the
/// constant term, in smooth mode: every hypersurface {(f-a)_S = 0} in its
/// subtorus is assumed smooth, so finite parts reduce to `(1-t)^{chi_S}`.
/// Strict non-degeneracy along the fiber is asserted by the caller; route B
/// additionally requires f - a quasi-convenient.
pub fn zeta_central_fiber_smooth(f: &Polynomial, route: Route) -> Result<ZetaFunction> {
    require_nonconstant(f)?;
    match route {
        Route::A => {
            let mut z = product_over_classes(f, |_| true)?;
            for s in relevant_subsets(f) {
                z.mul_factor(1, chi_subset_smooth(f, &s)?);
            }
            Ok(z)
        }
        Route::B => Ok(correction_factor(f)?.multiply(&zeta_finite_part_smooth(f)?)),
    }
}

/// Monodromy zeta function along a non-central fiber f^{-1}(c), c != a
/// (Thm 4.8(ii)): a power of (1-t) with exponent the sum of subset Euler
/// characteristics, which only see the polytope at infinity because the
/// shifted constant term a - c is nonzero. Strict non-degeneracy along
/// f^{-1}(c) is asserted by the caller.
pub fn zeta_fiber_nondegenerate(f: &Polynomial, c: &BigRational) -> Result<ZetaFunction> {
    require_nonconstant(f)?;
    if *c == f.constant_term() {
        return Err(Error::precondition(
            "c equals the constant term a; the central fiber is handled by \
             zeta_central_fiber_smooth (Thm 4.8(i))",
        ));
    }
    let mut z = ZetaFunction::one();
    for s in relevant_subsets(f) {
        let g = gamma_infinity(f, &s)?;
        z.mul_factor(1, subset_sign(s.len()) * volume_as_dim(&g, s.len())?);
    }
    Ok(z)
}

/// Assembles a fiber zeta from combinatorial data plus user-supplied
/// singular points: `combinatorial * (1-t)^{chi_smooth_locus} * prod local`
/// (Cor 3.7 / Cor 4.9(i)). The Euler characteristic of the fiber minus its
/// singular points and the local zetas are external knowledge.
pub fn combine_with_singular_data(
    combinatorial: &ZetaFunction,
    chi_smooth_locus: i64,
    data: &[SingularDatum],
) -> ZetaFunction {
    let mut z = combinatorial.clone();
    z.mul_factor(1, BigInt::from(chi_smooth_locus));
    for datum in data {
        z = z.multiply(&datum.local_zeta);
    }
    z
}

fn check_singular_data(data: &[SingularDatum]) -> Result<()> {
    for datum in data {
        if BigInt::one() - datum.local_zeta.degree() != BigInt::from(datum.milnor_number) {
            return Err(Error::precondition(
                "inconsistent singular datum: milnor_number must equal \
                 1 - deg(local_zeta) (Cor 4.5)",
            ));
        }
    }
    Ok(())
}

fn lattice_length_at_min(np: &Polytope, axis: usize) -> Result<BigInt> {
    let n = np.ambient_dim();
    let mut w = vec![0i64; n];
    w[axis] = 1;
    let face = supporting_face(np, &Covector::from_i64s(&w), Sense::Min)?;
    Ok(if face.dim == 1 {
        face.norm_volume
    } else {
        BigInt::zero()
    })
}

/// Jumping number chi(f^{-1}(a)) - chi(f^{-1}(c)) of a non-convenient
/// polynomial in two variables (Cor 4.5): the outside-facet sum plus the
/// Milnor numbers of the isolated singular points of the reduced central
/// fiber plus the boundary term K of Eq (4.14). Strong non-degeneracy along
/// f^{-1}(a) is asserted by the caller.
pub fn jumping_number_2d(f: &Polynomial, data: &[SingularDatum]) -> Result<BigInt> {
    if f.n_vars() != 2 {
        return Err(Error::precondition(format!(
            "the planar jumping formula is for 2 variables, got {} (Cor 4.5)",
            f.n_vars()
        )));
    }
    require_nonconstant(f)?;
    let profile = convenience_profile(f);
    if profile.convenient {
        return Err(Error::precondition("Cor 4.5 requires non-convenient f"));
    }
    check_singular_data(data)?;

    let report = bif_compact_facets(f, &[0, 1])?;
    let classes = report.classification.expect("bifurcation reports carry classes");
    let mut total = BigInt::zero();
    for (face, class) in report.faces.iter().zip(classes) {
        if class == FaceClass::Outside {
            total += &face.value * &face.norm_volume;
        }
    }
    for datum in data {
        total += BigInt::from(datum.milnor_number);
    }

    let m1 = BigInt::from(profile.m_minus_constant[0]);
    let m2 = BigInt::from(profile.m_minus_constant[1]);
    let np = newton_polytope_minus_constant(f, &[0, 1])?;
    let corner_in_support = f
        .terms()
        .contains_key(&profile.m_minus_constant.to_vec());
    let one = BigInt::one();
    let k = if m1.is_positive() && m2.is_positive() {
        let lx = lattice_length_at_min(&np, 1)?;
        let ly = lattice_length_at_min(&np, 0)?;
        (&m2 - &one) * lx + (&m1 - &one) * ly
    } else if m1.is_positive() {
        let ly = lattice_length_at_min(&np, 0)?;
        if corner_in_support {
            (&m1 - &one) * (ly - &one)
        } else {
            (&m1 - &one) * ly
        }
    } else if m2.is_positive() {
        let lx = lattice_length_at_min(&np, 1)?;
        if corner_in_support {
            (&m2 - &one) * (lx - &one)
        } else {
            (&m2 - &one) * lx
        }
    } else {
        BigInt::zero()
    };
    Ok(total + k)
}

/// Jumping number in any dimension (Cor 4.9(iii), Eq 4.31): `(-1)^n` times
/// the Milnor numbers of the isolated singular points of the central fiber
/// in the big torus, plus the signed facet sums over ALL compact facets of
/// the bifurcation polyhedra, plus 1. Strict non-degeneracy along the
/// central fiber is asserted by the caller.
pub fn jumping_number_nd(f: &Polynomial, mu_list: &[u64]) -> Result<BigInt> {
    require_nonconstant(f)?;
    let n = f.n_vars();
    let mut total = BigInt::zero();
    for &mu in mu_list {
        total += BigInt::from(mu);
    }
    if n % 2 == 1 {
        total = -total;
    }
    for s in relevant_subsets(f) {
        let report = bif_compact_facets(f, &s)?;
        let mut facet_sum = BigInt::zero();
        for face in &report.faces {
            facet_sum += &face.value * &face.norm_volume;
        }
        total += -subset_sign(s.len()) * facet_sum;
    }
    Ok(total + BigInt::one())
}
