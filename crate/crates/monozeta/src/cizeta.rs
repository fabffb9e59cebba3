//! Monodromy along the last coordinate of a polynomial map C^n -> C^k: the
//! polytope at infinity of the map, its facets outside the dual cone,
//! composition-indexed mixed volumes, candidate directions for the central
//! fiber, and the zeta functions they assemble into.
//!
//! Everything is indexed by variable subsets S as in [`crate::newton`]; a map
//! restricted to S keeps only the terms supported in R^S. The last component
//! plays the role the single polynomial plays in [`crate::zetacore`], and for
//! k = 1 every operation here collapses to its counterpart there.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlat::matrix::solve_left_integer;
use crate::exactlat::num::sub_vec;
use crate::exactlat::{
    convex_hull, facet_data, integer_kernel, minkowski_sum, supporting_face, Covector, FaceData,
    LatticePoint, Polytope, Sense,
};
use crate::newton::{
    check_condition_star, check_subset, convenience_profile, gamma_infinity, label,
    newton_polytope_minus_constant, nonempty_subsets,
};
use crate::polyio::Polynomial;
use crate::zetacore::{bkk_euler, compositions, distance_u64, Route, ZetaFunction};

/// A polynomial map C^n -> C^k, stored as its component list. All components
/// share one variable list, k may not exceed n, and the last component must
/// be non-constant: it is the coordinate along which monodromy is measured.
#[derive(Clone, Debug)]
pub struct PolyMap {
    components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(components: Vec<Polynomial>) -> Result<PolyMap> {
        let k = components.len();
        if k == 0 {
            return Err(Error::precondition("a polynomial map needs at least one component"));
        }
        let vars = components[0].vars();
        for f in &components[1..] {
            if f.vars() != vars {
                return Err(Error::precondition(
                    "all components of a polynomial map must share one variable list",
                ));
            }
        }
        if k > vars.len() {
            return Err(Error::precondition(format!(
                "a map to C^k needs k <= n: got {} components in {} variables",
                k,
                vars.len()
            )));
        }
        if components[k - 1].is_constant() {
            return Err(Error::precondition(
                "the last component must be non-constant; a constant map has no monodromy data",
            ));
        }
        Ok(PolyMap { components })
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn n_vars(&self) -> usize {
        self.components[0].n_vars()
    }

    /// The last component f_k.
    pub fn last(&self) -> &Polynomial {
        self.components.last().unwrap()
    }
}

/// Subset bookkeeping for a map: which of the first k-1 components have
/// Newton polytope meeting R^S, and whether S contributes to the products at
/// all.
#[derive(Clone, Debug)]
pub struct SubsetProfile {
    pub subset: Vec<usize>,
    /// 0-based indices among the first k-1 components whose Newton polytope
    /// meets R^S (the set I(S)).
    pub i_s: Vec<usize>,
    /// m(S) = #I(S) + 1.
    pub m_s: usize,
    /// The nonzero support points of the last component in R^S: generators
    /// of the cone over its polytope at infinity. Pairing against them
    /// decides membership in the dual cone.
    pub cone_generators: Vec<LatticePoint>,
    /// Γ∞^S(f_k) strictly larger than the origin and m(S) <= #S.
    pub admissible: bool,
}

impl SubsetProfile {
    /// u lies in the dual of the cone over Γ∞^S(f_k).
    pub fn in_dual_cone(&self, u: &Covector) -> bool {
        self.cone_generators.iter().all(|g| !u.eval(g).is_negative())
    }

    /// u lies in the interior of that dual cone: strictly positive pairing
    /// with every generator.
    pub fn in_dual_cone_interior(&self, u: &Covector) -> bool {
        self.cone_generators.iter().all(|g| u.eval(g).is_positive())
    }
}

pub fn subset_profile(map: &PolyMap, s: &[usize]) -> Result<SubsetProfile> {
    let n = map.n_vars();
    check_subset(s, n)?;
    let k = map.k();
    let i_s: Vec<usize> =
        (0..k - 1).filter(|&j| subset_is_relevant_full(&map.components[j], s)).collect();
    let m_s = i_s.len() + 1;
    let mut cone_generators: Vec<LatticePoint> = map
        .last()
        .restrict_to_subset(s)
        .support()
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    cone_generators.sort();
    let admissible = !cone_generators.is_empty() && m_s <= s.len();
    Ok(SubsetProfile { subset: s.to_vec(), i_s, m_s, cone_generators, admissible })
}

/// Membership test for I(S): the full Newton polytope of f_j (constant term
/// included) meets R^S. Differs from [`subset_is_relevant`] exactly when f_j
/// has a constant term.
fn subset_is_relevant_full(f: &Polynomial, s: &[usize]) -> bool {
    !f.restrict_to_subset(s).is_zero()
}

/// The full Newton polytope of f restricted to S, constant term included.
/// Empty when no term of f is supported in R^S.
fn newton_polytope_in(f: &Polynomial, s: &[usize]) -> Result<Polytope> {
    convex_hull(&f.restrict_to_subset(s).support(), f.n_vars())
}

/// The restricted Newton polytopes of the I(S) components, paired with their
/// component indices.
fn i_s_bodies(map: &PolyMap, profile: &SubsetProfile) -> Result<Vec<(usize, Polytope)>> {
    profile
        .i_s
        .iter()
        .map(|&j| Ok((j, newton_polytope_in(&map.components[j], &profile.subset)?)))
        .collect()
}

/// The polytope at infinity of the map restricted to S (Eq 5.14): the
/// Minkowski sum of the restricted Newton polytopes of the I(S) components
/// with the polytope at infinity of the last component.
pub fn p_infinity_subset(map: &PolyMap, s: &[usize]) -> Result<Polytope> {
    let profile = subset_profile(map, s)?;
    if profile.cone_generators.is_empty() {
        return Err(Error::precondition(format!(
            "the polytope at infinity of the map is undefined for S = {}: the Newton polytope \
             at infinity of the last component restricted to S is only the origin (Eq 5.14)",
            label(s)
        )));
    }
    let mut p = gamma_infinity(map.last(), s)?;
    for (_, body) in i_s_bodies(map, &profile)? {
        p = minkowski_sum(&p, &body)?;
    }
    Ok(p)
}

/// A facet of the polytope at infinity whose inner normal pairs negatively
/// with the polytope at infinity of the last component, together with the
/// positive pairing bound d (Eq 5.17) and the decomposition of the facet into
/// supporting faces of the summands (Eq 5.15).
#[derive(Clone, Debug)]
pub struct FacetAtInfinity {
    /// The facet, with its primitive inner minimizing normal.
    pub face: FaceData,
    /// d = -min of the normal over Γ∞^S(f_k), always positive.
    pub d: BigInt,
    /// (component index, supporting face at the normal): the I(S) components
    /// in ascending order, then the last component via its polytope at
    /// infinity.
    pub parts: Vec<(usize, FaceData)>,
}

pub fn facets_outside_dual(map: &PolyMap, s: &[usize]) -> Result<Vec<FacetAtInfinity>> {
    let profile = subset_profile(map, s)?;
    if !profile.admissible {
        return Err(Error::precondition(format!(
            "S = {} is not admissible: the products over subsets need the polytope at infinity \
             of the last component to exceed the origin and m(S) <= #S (Thm 5.5)",
            label(s)
        )));
    }
    let gk = gamma_infinity(map.last(), s)?;
    if gk.dim() != s.len() as i64 {
        return Err(Error::ConditionStar { subset: label(s), got: gk.dim(), want: s.len() });
    }
    let ibodies = i_s_bodies(map, &profile)?;
    let mut p = gk.clone();
    for (_, body) in &ibodies {
        p = minkowski_sum(&p, body)?;
    }
    let mut out = Vec::new();
    for fd in facet_data(&p)? {
        let kface = supporting_face(&gk, &fd.normal, Sense::Min)?;
        if !kface.value.is_negative() {
            continue;
        }
        let d = -kface.value.clone();
        let mut parts = Vec::with_capacity(ibodies.len() + 1);
        let mut sum: Option<Polytope> = None;
        for (j, body) in &ibodies {
            let part = supporting_face(body, &fd.normal, Sense::Min)?;
            sum = Some(match sum {
                None => part.polytope.clone(),
                Some(acc) => minkowski_sum(&acc, &part.polytope)?,
            });
            parts.push((*j, part));
        }
        let sum = match sum {
            None => kface.polytope.clone(),
            Some(acc) => minkowski_sum(&acc, &kface.polytope)?,
        };
        parts.push((map.k() - 1, kface));
        if sum.vertices() != fd.polytope.vertices() {
            return Err(Error::internal(&format!(
                "face decomposition failed for S = {}: a facet of the polytope at infinity \
                 is not the sum of the supporting faces of the summands (Eq 5.16)",
                label(s)
            )));
        }
        out.push(FacetAtInfinity { face: fd, d, parts });
    }
    Ok(out)
}

fn parity(exp: usize) -> BigInt {
    if exp % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Compositions (a_1..a_parts) of `total` with a_q >= 1 for q < parts and
/// the last entry allowed to be zero.
fn compositions_relaxed_last(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for last in 0..=total.saturating_sub(parts - 1) {
        for mut c in compositions(total - last, parts - 1) {
            c.push(last);
            out.push(c);
        }
    }
    out
}

/// Re-express a polytope whose directions lie in the span of `basis` in the
/// integer coordinates of that basis. The basis must be saturated, so the
/// coordinates are integral.
fn express_in_lattice(p: &Polytope, basis: &[Vec<BigInt>], d: usize) -> Result<Polytope> {
    let base = &p.vertices()[0].0;
    let pts: Vec<LatticePoint> = p
        .vertices()
        .iter()
        .map(|v| solve_left_integer(basis, &sub_vec(&v.0, base)).map(LatticePoint))
        .collect::<Result<_>>()?;
    convex_hull(&pts, d)
}

/// Sum over the relaxed compositions of dim(carrier) of the mixed volumes of
/// the parts, measured in the saturated lattice of the carrier's direction
/// span (Eqs 5.18 and 5.46). By convention the empty product for a
/// zero-dimensional carrier is 1 (Remark 5.4).
fn composition_mixed_sum(parts: &[Polytope], carrier: &Polytope) -> Result<BigInt> {
    let d = carrier.dim();
    if d < 0 {
        return Err(Error::EmptyPointSet);
    }
    let d = d as usize;
    if d == 0 {
        return Ok(BigInt::one());
    }
    let basis = carrier.dir_basis();
    let intrinsic: Vec<Polytope> =
        parts.iter().map(|p| express_in_lattice(p, basis, d)).collect::<Result<_>>()?;
    let mut total = BigInt::zero();
    for comp in compositions_relaxed_last(d, parts.len()) {
        let mut bodies = Vec::with_capacity(d);
        for (body, &times) in intrinsic.iter().zip(&comp) {
            for _ in 0..times {
                bodies.push(body.clone());
            }
        }
        total += crate::exactlat::mixed_volume(&bodies)?;
    }
    Ok(total)
}

/// The multiplicity K of a facet at infinity (Eq 5.18): the composition sum
/// of mixed volumes of the facet's parts. For k = 1 this is the normalized
/// volume of the facet.
pub fn k_mixed(map: &PolyMap, s: &[usize], facet: &FacetAtInfinity) -> Result<BigInt> {
    check_subset(s, map.n_vars())?;
    if facet.face.dim + 1 != s.len() as i64 {
        return Err(Error::precondition(
            "the facet record does not match S: its face must have dimension #S - 1",
        ));
    }
    let parts: Vec<Polytope> = facet.parts.iter().map(|(_, fd)| fd.polytope.clone()).collect();
    composition_mixed_sum(&parts, &facet.face.polytope)
}

/// Monodromy zeta function at infinity of a polynomial map along its last
/// coordinate (Thm 5.5): the product over admissible subsets S of
/// `(1-t^d)^{(-1)^(#S-m(S)) K}` over the facets outside the dual cone. The
/// last component must satisfy condition (*); non-degeneracy at infinity
/// (Def 5.3) is asserted by the caller.
pub fn zeta_ci_at_infinity(map: &PolyMap) -> Result<ZetaFunction> {
    check_condition_star(map.last())?;
    let mut z = ZetaFunction::one();
    for s in nonempty_subsets(map.n_vars()) {
        let profile = subset_profile(map, &s)?;
        if !profile.admissible {
            continue;
        }
        let sign = parity(s.len() - profile.m_s);
        for facet in facets_outside_dual(map, &s)? {
            let k = k_mixed(map, &s, &facet)?;
            z.mul_factor(distance_u64(&facet.d)?, &sign * k);
        }
    }
    Ok(z)
}

/// Euler characteristic of the generic fiber of the map (Eq 5.24), as the
/// explicit double sum. Equals the degree of [`zeta_ci_at_infinity`].
pub fn euler_ci_generic_fiber(map: &PolyMap) -> Result<BigInt> {
    check_condition_star(map.last())?;
    let mut acc = BigInt::zero();
    for s in nonempty_subsets(map.n_vars()) {
        let profile = subset_profile(map, &s)?;
        if !profile.admissible {
            continue;
        }
        let sign = parity(s.len() - profile.m_s);
        for facet in facets_outside_dual(map, &s)? {
            acc += &sign * &facet.d * k_mixed(map, &s, &facet)?;
        }
    }
    Ok(acc)
}

/// Side of the nonnegative orthant a central candidate falls on (Eq 5.52).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CandidateClass {
    InsideOrthant,
    OutsideOrthant,
}

impl fmt::Display for CandidateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CandidateClass::InsideOrthant => write!(f, "inside_orthant"),
            CandidateClass::OutsideOrthant => write!(f, "outside_orthant"),
        }
    }
}

/// A candidate direction for the central-fiber product: a primitive covector
/// in the interior of the dual cone whose supporting faces of the summands
/// add up to a (#S-1)-dimensional face (Eq 5.42), with the positive pairing
/// bound e (Eq 5.45), the composition-summed mixed volume L (Eq 5.46), and
/// the orthant classification.
#[derive(Clone, Debug)]
pub struct CentralCandidate {
    pub w: Covector,
    pub e: BigInt,
    pub l: BigInt,
    pub class: CandidateClass,
}

pub fn ci_central_candidates(map: &PolyMap, s: &[usize]) -> Result<Vec<CentralCandidate>> {
    let profile = subset_profile(map, s)?;
    if profile.cone_generators.is_empty() {
        return Err(Error::precondition(format!(
            "central candidates are undefined for S = {}: the Newton polytope at infinity of \
             the last component restricted to S is only the origin (Eq 5.42)",
            label(s)
        )));
    }
    let ibodies = i_s_bodies(map, &profile)?;
    let kbody = newton_polytope_minus_constant(map.last(), s)?;
    let mut q = kbody.clone();
    for (_, body) in &ibodies {
        q = minkowski_sum(&q, body)?;
    }
    // The directions where the summed supporting faces are (#S-1)-dimensional:
    // inner facet normals when the total sum is full-dimensional in R^S, the
    // two conormals of its affine span when it is one dimension short, none
    // otherwise.
    let mut ws: Vec<Covector> = if q.dim() == s.len() as i64 {
        facet_data(&q)?.into_iter().map(|fd| fd.normal).collect()
    } else if q.dim() + 1 == s.len() as i64 {
        let rows: Vec<Vec<BigInt>> = q
            .dir_basis()
            .iter()
            .map(|r| s.iter().map(|&i| r[i].clone()).collect())
            .collect();
        let kernel = integer_kernel(&rows, s.len());
        if kernel.len() != 1 {
            return Err(Error::internal("conormal space of a codimension-one sum must be a line"));
        }
        let mut w = vec![BigInt::zero(); map.n_vars()];
        for (&i, c) in s.iter().zip(&kernel[0]) {
            w[i] = c.clone();
        }
        let w = Covector(w).primitivized();
        vec![w.negated(), w]
    } else {
        Vec::new()
    };
    ws.sort();
    let mut out = Vec::new();
    for w in ws {
        if !profile.in_dual_cone_interior(&w) {
            continue;
        }
        let mut parts = Vec::with_capacity(ibodies.len() + 1);
        let mut carrier: Option<Polytope> = None;
        for (_, body) in &ibodies {
            let face = supporting_face(body, &w, Sense::Min)?;
            carrier = Some(match carrier {
                None => face.polytope.clone(),
                Some(acc) => minkowski_sum(&acc, &face.polytope)?,
            });
            parts.push(face.polytope);
        }
        let kface = supporting_face(&kbody, &w, Sense::Min)?;
        let e = kface.value.clone();
        if !e.is_positive() {
            return Err(Error::internal(
                "a candidate in the interior of the dual cone must pair positively with the \
                 Newton polytope of the last component minus its constant term (Eq 5.45)",
            ));
        }
        let carrier = match carrier {
            None => kface.polytope.clone(),
            Some(acc) => minkowski_sum(&acc, &kface.polytope)?,
        };
        parts.push(kface.polytope);
        if carrier.dim() + 1 != s.len() as i64 {
            return Err(Error::internal(
                "the summed supporting faces of a candidate must have dimension #S - 1 (Eq 5.42)",
            ));
        }
        let l = composition_mixed_sum(&parts, &carrier)?;
        let class = if w.0.iter().all(|c| !c.is_negative()) {
            CandidateClass::InsideOrthant
        } else {
            CandidateClass::OutsideOrthant
        };
        out.push(CentralCandidate { w, e, l, class });
    }
    Ok(out)
}

/// Which fiber of the last coordinate is being encircled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberMode {
    /// The fiber over the constant term a of the last component (Thm 5.9(i)).
    Central,
    /// A fiber over any other value (Thm 5.9(ii)).
    Generic,
}

/// Euler characteristic of the torus part of the fiber over S: the
/// complete intersection cut out by the I(S) components together with the
/// given last polytope, in dimension #S.
fn chi_subset(
    map: &PolyMap,
    profile: &SubsetProfile,
    last_body: &Polytope,
    s: &[usize],
) -> Result<BigInt> {
    let mut bodies = Vec::with_capacity(profile.m_s);
    for (_, body) in i_s_bodies(map, profile)? {
        bodies.push(project_to_subset(&body, s)?);
    }
    bodies.push(project_to_subset(last_body, s)?);
    bkk_euler(&bodies, s.len())
}

/// Forget the coordinates outside S. Valid for bodies supported in R^S.
fn project_to_subset(p: &Polytope, s: &[usize]) -> Result<Polytope> {
    let pts: Vec<LatticePoint> = p
        .vertices()
        .iter()
        .map(|v| LatticePoint(s.iter().map(|&i| v.0[i].clone()).collect()))
        .collect();
    convex_hull(&pts, s.len())
}

/// Monodromy zeta function of the map along the fiber of its last coordinate
/// over c, in smooth mode: every torus complete intersection met along the
/// way is assumed smooth and reduced, so each finite part is `(1-t)^chi`.
/// Strict non-degeneracy along the fiber (Def 5.8) is asserted by the caller.
///
/// Central mode requires c = a, the constant term of the last component, and
/// assembles Thm 5.9(i) (route A) or Thm 5.10 (route B, which additionally
/// requires the last component minus a to be quasi-convenient and all earlier
/// components to be convenient). Generic mode requires c != a, follows Thm
/// 5.9(ii), and ignores the route.
pub fn zeta_ci_fiber(
    map: &PolyMap,
    c: &BigRational,
    mode: FiberMode,
    route: Route,
) -> Result<ZetaFunction> {
    let a = map.last().constant_term();
    match mode {
        FiberMode::Central if *c != a => {
            return Err(Error::precondition(format!(
                "central mode needs c equal to the constant term a = {} of the last component; \
                 got c = {} (Thm 5.9(i))",
                a, c
            )));
        }
        FiberMode::Generic if *c == a => {
            return Err(Error::precondition(
                "generic mode needs c different from the constant term of the last component; \
                 the central fiber is the business of Thm 5.9(i)",
            ));
        }
        _ => {}
    }
    let n = map.n_vars();
    let k = map.k();
    if mode == FiberMode::Central && route == Route::B {
        if !convenience_profile(map.last()).quasi_convenient {
            return Err(Error::precondition(
                "route B requires the last component minus its constant term to be \
                 quasi-convenient (Thm 5.10)",
            ));
        }
        for j in 0..k - 1 {
            if !convenience_profile(&map.components[j]).convenient {
                return Err(Error::precondition(format!(
                    "route B requires the first k-1 components to be convenient (Thm 5.10); \
                     component {} is not",
                    j + 1
                )));
            }
        }
    }
    let mut z = ZetaFunction::one();
    for s in nonempty_subsets(n) {
        let profile = subset_profile(map, &s)?;
        if !profile.admissible {
            continue;
        }
        match mode {
            FiberMode::Generic => {
                let gk = gamma_infinity(map.last(), &s)?;
                z.mul_factor(1, chi_subset(map, &profile, &gk, &s)?);
            }
            FiberMode::Central => {
                // Route A takes every candidate with the sign (-1)^(#S-m(S));
                // route B splits them by orthant with the literal sign
                // (-1)^(#S-k) of Eq (5.53). The hypotheses checked above force
                // m(S) = k, so the two routes agree on their common domain.
                let sign = match route {
                    Route::A => parity(s.len() - profile.m_s),
                    Route::B => {
                        if profile.m_s != k {
                            return Err(Error::internal(
                                "convenient earlier components must put every index in I(S)",
                            ));
                        }
                        parity(s.len() - k)
                    }
                };
                let candidates = ci_central_candidates(map, &s)?;
                if route == Route::B {
                    for cand in
                        candidates.iter().filter(|c| c.class == CandidateClass::OutsideOrthant)
                    {
                        z.mul_factor(distance_u64(&cand.e)?, &sign * &cand.l);
                    }
                    for cand in
                        candidates.iter().filter(|c| c.class == CandidateClass::InsideOrthant)
                    {
                        z.mul_factor(distance_u64(&cand.e)?, &sign * &cand.l);
                    }
                } else {
                    for cand in &candidates {
                        z.mul_factor(distance_u64(&cand.e)?, &sign * &cand.l);
                    }
                }
                let kbody = newton_polytope_minus_constant(map.last(), &s)?;
                z.mul_factor(1, chi_subset(map, &profile, &kbody, &s)?);
            }
        }
    }
    Ok(z)
}
