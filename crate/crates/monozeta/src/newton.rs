//! Newton-polytope data of a polynomial: the polytope at infinity restricted
//! to coordinate subspaces, the Newton polytope of f - a, the bifurcation
//! polyhedron, convenience predicates, and face reports whose normals are
//! classified by sign against the nonnegative orthant.
//!
//! Subsets S of the variable set are written as sorted 0-indexed slices. All
//! bodies live in the full ambient space; a body "restricted to S" has all
//! coordinates outside S equal to zero, and its facet normals come out
//! supported on S as well.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result, SubsetLabel};
use crate::exactlat::{
    compact_facet_data, convex_hull, facet_data, polyhedron_hull, rank, Covector, FaceData,
    LatticePoint, Polyhedron, Polytope,
};
use crate::polyio::Polynomial;

pub(crate) fn check_subset(s: &[usize], n: usize) -> Result<()> {
    if s.is_empty() {
        return Err(Error::precondition("the variable subset S must be nonempty"));
    }
    for w in s.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::precondition(
                "the variable subset S must be strictly increasing",
            ));
        }
    }
    if *s.last().unwrap() >= n {
        return Err(Error::precondition(format!(
            "subset index {} is out of range for {} variables",
            s.last().unwrap() + 1,
            n
        )));
    }
    Ok(())
}

pub(crate) fn label(s: &[usize]) -> SubsetLabel {
    SubsetLabel(s.to_vec())
}

/// All nonempty subsets of {0, .., n-1}, ascending by bitmask.
pub fn nonempty_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        out.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
    }
    out
}

/// True when the polytope at infinity restricted to S is strictly larger
/// than the origin, i.e. some nonzero support point of f lies in R^S.
pub fn subset_is_relevant(f: &Polynomial, s: &[usize]) -> bool {
    f.support().iter().any(|p| !p.is_zero() && in_subspace(p, s))
}

/// The nonempty subsets S with a nonzero support point of f in R^S, in
/// ascending bitmask order: the index set of every subset product.
pub fn relevant_subsets(f: &Polynomial) -> Vec<Vec<usize>> {
    nonempty_subsets(f.n_vars())
        .into_iter()
        .filter(|s| subset_is_relevant(f, s))
        .collect()
}

fn in_subspace(p: &LatticePoint, s: &[usize]) -> bool {
    let mut inside = vec![false; p.ambient_dim()];
    for &i in s {
        inside[i] = true;
    }
    p.0.iter().zip(&inside).all(|(c, &ok)| ok || c.is_zero())
}

/// Support points of f lying in the subspace R^S, origin included if present.
fn support_in(f: &Polynomial, s: &[usize]) -> Vec<LatticePoint> {
    f.support().into_iter().filter(|p| in_subspace(p, s)).collect()
}

/// Support points of f - a (the constant term dropped) lying in R^S.
fn support_minus_constant_in(f: &Polynomial, s: &[usize]) -> Vec<LatticePoint> {
    support_in(f, s).into_iter().filter(|p| !p.is_zero()).collect()
}

/// The Newton polytope at infinity restricted to S: the convex hull of the
/// origin together with the support points lying in R^S. This equals the
/// intersection of the full polytope at infinity with R^S, because that
/// intersection is the face supported by minus the sum of the coordinate
/// functionals outside S.
pub fn gamma_infinity(f: &Polynomial, s: &[usize]) -> Result<Polytope> {
    let n = f.n_vars();
    check_subset(s, n)?;
    if f.is_zero() {
        return Err(Error::precondition(
            "the zero polynomial has no Newton polytope at infinity",
        ));
    }
    let mut pts = support_in(f, s);
    pts.push(LatticePoint::zero(n));
    convex_hull(&pts, n)
}

/// The Newton polytope of f - a restricted to S: the hull of the support with
/// the constant term removed. May be empty; a constant polynomial is
/// rejected.
pub fn newton_polytope_minus_constant(f: &Polynomial, s: &[usize]) -> Result<Polytope> {
    let n = f.n_vars();
    check_subset(s, n)?;
    if f.is_constant() {
        return Err(Error::precondition(
            "f - a is the zero polynomial: f is constant",
        ));
    }
    convex_hull(&support_minus_constant_in(f, s), n)
}

/// The bifurcation polyhedron restricted to S: the Minkowski sum of the
/// Newton polytope of f - a with the cone over the polytope at infinity,
/// intersected with R^S. Both summands are generated by the support points of
/// f - a in R^S, so those points serve as both generators and rays.
pub fn bifurcation_polyhedron(f: &Polynomial, s: &[usize]) -> Result<Polyhedron> {
    let n = f.n_vars();
    check_subset(s, n)?;
    let pts = support_minus_constant_in(f, s);
    if pts.is_empty() {
        return Err(Error::precondition(format!(
            "the bifurcation polyhedron is undefined for S = {}: the Newton \
             polytope at infinity restricted to S is only the origin (Def 4.6)",
            label(s)
        )));
    }
    let rays = pts.clone();
    polyhedron_hull(&pts, &rays, n)
}

/// Convenience data of a polynomial. The reduction divides f - a by the
/// monomial of coordinatewise minimal exponents; the semi- and
/// quasi-convenience flags refer to that reduced polynomial (Def 4.10).
#[derive(Clone, Debug)]
pub struct ConvenienceProfile {
    /// every restriction of the polytope at infinity is {0} or full in R^S
    pub condition_star: bool,
    /// the support has a point on every coordinate axis away from the origin
    pub convenient: bool,
    /// the reduction of f - a is convenient
    pub semi_convenient: bool,
    /// the Newton polytope of the reduction of f - a meets every coordinate
    /// subspace R^S
    pub quasi_convenient: bool,
    /// coordinatewise minimum of the support of f
    pub m: Vec<u64>,
    /// coordinatewise minimum of the support of f - a
    pub m_minus_constant: Vec<u64>,
    /// (f - a) / x^m_minus_constant; zero when f is constant
    pub reduced_poly: Polynomial,
}

fn coordinatewise_min(points: &[LatticePoint], n: usize) -> Vec<u64> {
    let mut m: Option<Vec<BigInt>> = None;
    for p in points {
        match &mut m {
            None => m = Some(p.0.clone()),
            Some(cur) => {
                for (c, v) in cur.iter_mut().zip(&p.0) {
                    if v < c {
                        *c = v.clone();
                    }
                }
            }
        }
    }
    match m {
        None => vec![0; n],
        Some(cur) => cur
            .iter()
            .map(|c| u64::try_from(c).expect("support exponents are nonnegative"))
            .collect(),
    }
}

fn is_convenient(support: &[LatticePoint], n: usize) -> bool {
    (0..n).all(|i| {
        support.iter().any(|p| {
            p.0[i].is_positive() && p.0.iter().enumerate().all(|(j, c)| j == i || c.is_zero())
        })
    })
}

pub fn convenience_profile(f: &Polynomial) -> ConvenienceProfile {
    let n = f.n_vars();
    let supp = f.support();
    let condition_star = nonempty_subsets(n).into_iter().all(|s| {
        let rows: Vec<Vec<BigInt>> = supp
            .iter()
            .filter(|p| in_subspace(p, &s))
            .map(|p| p.0.clone())
            .collect();
        let r = rank(&rows);
        r == 0 || r == s.len()
    });
    let convenient = is_convenient(&supp, n);
    let m = coordinatewise_min(&supp, n);

    let h = f.sub_constant(&f.constant_term());
    let hsupp = h.support();
    let m_minus_constant = coordinatewise_min(&hsupp, n);
    let reduced_poly = Polynomial::new(
        f.vars().to_vec(),
        h.terms().iter().map(|(exp, c)| {
            let shifted: Vec<u64> = exp
                .iter()
                .zip(&m_minus_constant)
                .map(|(e, mi)| e - mi)
                .collect();
            (shifted, c.clone())
        }),
    )
    .expect("shifting exponents preserves arity");
    let rsupp = reduced_poly.support();
    let semi_convenient = !h.is_zero() && is_convenient(&rsupp, n);
    let quasi_convenient = !h.is_zero()
        && nonempty_subsets(n)
            .into_iter()
            .all(|s| rsupp.iter().any(|p| in_subspace(p, &s)));

    ConvenienceProfile {
        condition_star,
        convenient,
        semi_convenient,
        quasi_convenient,
        m,
        m_minus_constant,
        reduced_poly,
    }
}

/// Checks that every restriction of the polytope at infinity is {0} or full
/// dimensional in its subspace, returning the first offending subset.
pub fn check_condition_star(f: &Polynomial) -> Result<()> {
    let n = f.n_vars();
    if f.is_zero() {
        return Err(Error::precondition(
            "the zero polynomial has no Newton polytope at infinity",
        ));
    }
    let supp = f.support();
    for s in nonempty_subsets(n) {
        let rows: Vec<Vec<BigInt>> = supp
            .iter()
            .filter(|p| in_subspace(p, &s))
            .map(|p| p.0.clone())
            .collect();
        let r = rank(&rows);
        if r != 0 && r != s.len() {
            return Err(Error::ConditionStar {
                subset: label(&s),
                got: r as i64,
                want: s.len(),
            });
        }
    }
    Ok(())
}

/// Sign class of a facet normal against the nonnegative orthant of R^S.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceClass {
    /// strictly positive on every coordinate of S
    Interior,
    /// nonnegative on S with a zero entry; then supported on a single axis
    Axis,
    /// negative on some coordinate of S
    Outside,
}

impl fmt::Display for FaceClass {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(match self {
            FaceClass::Interior => "interior",
            FaceClass::Axis => "axis",
            FaceClass::Outside => "outside",
        })
    }
}

/// The body a face report was computed from.
#[derive(Clone, Debug)]
pub enum SubsetBody {
    Polytope(Polytope),
    Polyhedron(Polyhedron),
}

/// Faces of a Newton body restricted to a subset S, with the facet normal,
/// its value on the face, and the normalized volume of the face carrier.
/// `classification` is parallel to `faces` and present exactly for
/// bifurcation polyhedra.
#[derive(Clone, Debug)]
pub struct SubsetFaceReport {
    pub subset: Vec<usize>,
    pub body: SubsetBody,
    pub faces: Vec<FaceData>,
    pub classification: Option<Vec<FaceClass>>,
}

/// Facets of the polytope at infinity restricted to S that do not contain
/// the origin, reported with the maximizing normal, so `value` is the
/// positive lattice distance d of the face from the origin.
pub fn faces_at_infinity(f: &Polynomial, s: &[usize]) -> Result<SubsetFaceReport> {
    let g = gamma_infinity(f, s)?;
    if g.dim() <= 0 {
        return Err(Error::precondition(format!(
            "no faces at infinity for S = {}: the Newton polytope at infinity \
             restricted to S is only the origin",
            label(s)
        )));
    }
    if g.dim() != s.len() as i64 {
        return Err(Error::ConditionStar {
            subset: label(s),
            got: g.dim(),
            want: s.len(),
        });
    }
    let mut faces = Vec::new();
    for fd in facet_data(&g)? {
        if fd.value.is_negative() {
            faces.push(FaceData {
                normal: fd.normal.negated(),
                value: -fd.value.clone(),
                ..fd
            });
        }
    }
    faces.sort_by(|a, b| (&a.normal, &a.value).cmp(&(&b.normal, &b.value)));
    Ok(SubsetFaceReport {
        subset: s.to_vec(),
        body: SubsetBody::Polytope(g),
        faces,
        classification: None,
    })
}

fn classify_normal(u: &Covector, s: &[usize]) -> Result<FaceClass> {
    let mut inside = vec![false; u.0.len()];
    for &i in s {
        inside[i] = true;
    }
    for (j, c) in u.0.iter().enumerate() {
        if !inside[j] && !c.is_zero() {
            return Err(Error::internal(
                "facet normal of a restricted body is not supported on S",
            ));
        }
    }
    let mut pos = 0usize;
    let mut zero = 0usize;
    let mut neg = 0usize;
    for &i in s {
        match u.0[i].sign() {
            num_bigint::Sign::Plus => pos += 1,
            num_bigint::Sign::NoSign => zero += 1,
            num_bigint::Sign::Minus => neg += 1,
        }
    }
    Ok(if neg > 0 {
        FaceClass::Outside
    } else if zero > 0 {
        let _ = pos;
        FaceClass::Axis
    } else {
        FaceClass::Interior
    })
}

/// Compact facets of the bifurcation polyhedron restricted to S, classified
/// by the sign pattern of their inner normals. When the polyhedron is not
/// full dimensional in R^S the face list is empty.
pub fn bif_compact_facets(f: &Polynomial, s: &[usize]) -> Result<SubsetFaceReport> {
    let b = bifurcation_polyhedron(f, s)?;
    let mut faces = Vec::new();
    let mut classes = Vec::new();
    if b.dim() == s.len() as i64 {
        for fd in compact_facet_data(&b)? {
            if !fd.value.is_positive() {
                return Err(Error::precondition(format!(
                    "compact facet of the bifurcation polyhedron for S = {} \
                     has lattice distance {}, but Thm 4.8 requires a positive \
                     distance",
                    label(s),
                    fd.value
                )));
            }
            let class = classify_normal(&fd.normal, s)?;
            if class == FaceClass::Axis {
                let nonzero = s.iter().filter(|&&i| !fd.normal.0[i].is_zero()).count();
                if nonzero != 1 {
                    if convenience_profile(f).quasi_convenient {
                        return Err(Error::internal(
                            "boundary-class facet normal off every coordinate \
                             axis despite quasi-convenience",
                        ));
                    }
                    return Err(Error::precondition(format!(
                        "compact facet normal {:?} for S = {} lies on the \
                         boundary of the nonnegative orthant but not on a \
                         coordinate axis; this needs f - a to be \
                         quasi-convenient (Def 4.10)",
                        fd.normal.0, label(s)
                    )));
                }
            }
            faces.push(fd);
            classes.push(class);
        }
    }
    Ok(SubsetFaceReport {
        subset: s.to_vec(),
        body: SubsetBody::Polyhedron(b),
        faces,
        classification: Some(classes),
    })
}
