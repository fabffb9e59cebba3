//! Exact convex hulls of lattice point sets, in any dimension up to the
//! ambient guard. Lower-dimensional hulls are computed inside their own
//! affine lattice and lifted back, so facet data is exact for degenerate
//! inputs too.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::matrix::{integer_kernel, rank, saturate, solve_left_integer, solve_rational, Row};
use super::num::{dot, primitivize, sub_vec};
use super::point::{Covector, LatticePoint};
use crate::error::{Error, Result};

/// Hard cap on the ambient dimension; hull complexity explodes beyond this.
pub const MAX_AMBIENT_DIM: usize = 12;

/// One facet-defining inequality `<normal, x> >= offset`, tight exactly on
/// the facet. Normals are primitive and point into the polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetIneq {
    pub normal: Covector,
    pub offset: BigInt,
}

impl FacetIneq {
    pub fn satisfied_by(&self, p: &LatticePoint) -> bool {
        self.normal.eval(p) >= self.offset
    }

    pub fn tight_at(&self, p: &LatticePoint) -> bool {
        self.normal.eval(p) == self.offset
    }
}

/// A lattice polytope, stored by its extreme vertices plus facet
/// inequalities. `dim` is the intrinsic dimension (-1 for the empty set).
/// For polytopes of dimension below the ambient space, `facets` describes
/// the (dim-1)-faces via ambient covectors whose restriction to the affine
/// hull cuts them out; `dir_basis` is a saturated basis of the direction
/// lattice of the affine hull.
#[derive(Debug, Clone)]
pub struct Polytope {
    pub(crate) ambient: usize,
    pub(crate) vertices: Vec<LatticePoint>,
    pub(crate) dim: i64,
    pub(crate) facets: Vec<FacetIneq>,
    pub(crate) dir_basis: Vec<Row>,
}

impl Polytope {
    pub fn empty(ambient: usize) -> Self {
        Polytope { ambient, vertices: Vec::new(), dim: -1, facets: Vec::new(), dir_basis: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[FacetIneq] {
        &self.facets
    }

    pub fn dir_basis(&self) -> &[Row] {
        &self.dir_basis
    }

    /// Rational membership test.
    pub fn contains(&self, p: &LatticePoint) -> bool {
        if self.is_empty() {
            return false;
        }
        if p.ambient_dim() != self.ambient {
            return false;
        }
        if (self.dim as usize) < self.ambient {
            // must lie in the affine hull: p - v0 in span(dir_basis)
            let t = sub_vec(&p.0, &self.vertices[0].0);
            if self.dim == 0 {
                return t.iter().all(|x| x.is_zero());
            }
            let at: Vec<Row> = (0..self.ambient)
                .map(|j| self.dir_basis.iter().map(|r| r[j].clone()).collect())
                .collect();
            if solve_rational(&at, &t).is_none() {
                return false;
            }
        }
        self.facets.iter().all(|f| f.satisfied_by(p))
    }
}

struct WorkFacet {
    w: Row,
    c: BigInt,
    on: Vec<usize>,
}

fn affine_rank(indices: &[usize], pts: &[Row]) -> i64 {
    if indices.len() <= 1 {
        return indices.len() as i64 - 1;
    }
    let base = &pts[indices[0]];
    let diffs: Vec<Row> = indices[1..].iter().map(|&i| sub_vec(&pts[i], base)).collect();
    rank(&diffs) as i64
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Hyperplane through the affinely-(d-1)-dimensional point set given by
/// `indices` (relative to full dimension `d`): returns the primitive normal
/// and its value on the set.
fn hyperplane_through(indices: &[usize], pts: &[Row], d: usize) -> Result<(Row, BigInt)> {
    let base = &pts[indices[0]];
    let diffs: Vec<Row> = indices[1..].iter().map(|&i| sub_vec(&pts[i], base)).collect();
    let kern = integer_kernel(&diffs, d);
    if kern.len() != 1 {
        return Err(Error::internal("facet candidate is not a hyperplane"));
    }
    let w = kern.into_iter().next().unwrap();
    let c = dot(&w, base);
    Ok((w, c))
}

fn scan_on_set(w: &Row, c: &BigInt, pts: &[Row]) -> Vec<usize> {
    (0..pts.len()).filter(|&i| dot(w, &pts[i]) == *c).collect()
}

/// Incremental beneath-beyond hull for full-dimensional point sets in Z^d.
/// `pts` must be deduplicated, lexicographically sorted, and of affine rank
/// exactly `d >= 1`. Returns the facet list and the extreme point indices.
fn full_dim_hull(pts: &[Row], d: usize) -> Result<(Vec<WorkFacet>, Vec<usize>)> {
    // Greedy initial simplex in lex order.
    let mut simplex = vec![0usize];
    let mut span: Vec<Row> = Vec::new();
    for i in 1..pts.len() {
        if simplex.len() == d + 1 {
            break;
        }
        let cand = sub_vec(&pts[i], &pts[0]);
        let old = span.len();
        span.push(cand);
        if rank(&span) > old {
            simplex.push(i);
        } else {
            span.pop();
        }
    }
    if simplex.len() != d + 1 {
        return Err(Error::internal("point set is not full-dimensional"));
    }

    // Interior reference: (d+1) times the centroid of the initial simplex.
    let mut cref = vec![BigInt::zero(); d];
    for &i in &simplex {
        for j in 0..d {
            cref[j] += &pts[i][j];
        }
    }
    let scale = BigInt::from(d as i64 + 1);
    let orient = |mut w: Row, mut c: BigInt| -> Result<(Row, BigInt)> {
        let lhs = dot(&w, &cref);
        let rhs = &c * &scale;
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => Ok((w, c)),
            std::cmp::Ordering::Less => {
                for x in w.iter_mut() {
                    *x = -&*x;
                }
                c = -c;
                Ok((w, c))
            }
            std::cmp::Ordering::Equal => Err(Error::internal("degenerate facet orientation")),
        }
    };

    let mut facets: Vec<WorkFacet> = Vec::new();
    for drop in 0..=d {
        let face: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != drop)
            .map(|(_, &i)| i)
            .collect();
        let (w, c) = hyperplane_through(&face, pts, d)?;
        let (w, c) = orient(w, c)?;
        let on = scan_on_set(&w, &c, pts);
        facets.push(WorkFacet { w, c, on });
    }

    for p in 0..pts.len() {
        if simplex.contains(&p) {
            continue;
        }
        let vals: Vec<BigInt> = facets.iter().map(|f| dot(&f.w, &pts[p])).collect();
        let visible: Vec<bool> = facets.iter().zip(&vals).map(|(f, v)| *v < f.c).collect();
        if !visible.iter().any(|&v| v) {
            for (f, v) in facets.iter_mut().zip(&vals) {
                if *v == f.c && !f.on.contains(&p) {
                    let pos = f.on.partition_point(|&x| x < p);
                    f.on.insert(pos, p);
                }
            }
            continue;
        }
        let mut fresh: Vec<WorkFacet> = Vec::new();
        for fi in 0..facets.len() {
            if !visible[fi] {
                continue;
            }
            for gi in 0..facets.len() {
                if visible[gi] {
                    continue;
                }
                let ridge = intersect_sorted(&facets[fi].on, &facets[gi].on);
                if affine_rank(&ridge, pts) != d as i64 - 2 {
                    continue;
                }
                if vals[gi] == facets[gi].c {
                    // p lies on the neighbor's hyperplane: that facet simply
                    // grows, no new facet across this ridge.
                    continue;
                }
                let mut gen = vec![p];
                gen.extend_from_slice(&ridge);
                let (w, c) = hyperplane_through(&gen, pts, d)?;
                let (w, c) = orient(w, c)?;
                if fresh.iter().any(|f| f.w == w && f.c == c)
                    || facets.iter().enumerate().any(|(k, f)| !visible[k] && f.w == w && f.c == c)
                {
                    continue;
                }
                let on = scan_on_set(&w, &c, pts);
                fresh.push(WorkFacet { w, c, on });
            }
        }
        let mut kept: Vec<WorkFacet> = Vec::new();
        for (k, f) in facets.into_iter().enumerate() {
            if !visible[k] {
                kept.push(f);
            }
        }
        for f in kept.iter_mut() {
            if dot(&f.w, &pts[p]) == f.c && !f.on.contains(&p) {
                let pos = f.on.partition_point(|&x| x < p);
                f.on.insert(pos, p);
            }
        }
        kept.extend(fresh);
        facets = kept;
    }

    // Extreme points: active facet normals span the whole space.
    let mut vertex_idx = Vec::new();
    for i in 0..pts.len() {
        let active: Vec<Row> = facets.iter().filter(|f| f.on.contains(&i)).map(|f| f.w.clone()).collect();
        if rank(&active) == d {
            vertex_idx.push(i);
        }
    }

    // Sanity checks, always on: containment and genuine facet dimension.
    for f in &facets {
        for (i, pt) in pts.iter().enumerate() {
            if dot(&f.w, pt) < f.c {
                return Err(Error::internal(&format!(
                    "hull facet violated by input point {}",
                    i
                )));
            }
        }
        if affine_rank(&f.on, pts) != d as i64 - 1 {
            return Err(Error::internal("hull facet has wrong dimension"));
        }
    }
    if vertex_idx.is_empty() {
        return Err(Error::internal("hull produced no vertices"));
    }

    facets.sort_by(|a, b| (&a.w, &a.c).cmp(&(&b.w, &b.c)));
    Ok((facets, vertex_idx))
}

/// Convex hull of a finite set of lattice points.
pub fn convex_hull(points: &[LatticePoint], ambient: usize) -> Result<Polytope> {
    if ambient > MAX_AMBIENT_DIM {
        return Err(Error::DimensionTooLarge(ambient));
    }
    hull_any_dim(points, ambient)
}

/// Hull without the ambient guard; only for internal constructions that work
/// one dimension above user space (homogenization).
pub(crate) fn hull_any_dim(points: &[LatticePoint], ambient: usize) -> Result<Polytope> {
    for p in points {
        if p.ambient_dim() != ambient {
            return Err(Error::DimensionMismatch { expected: ambient, got: p.ambient_dim() });
        }
    }
    let mut pts: Vec<Row> = points.iter().map(|p| p.0.clone()).collect();
    pts.sort();
    pts.dedup();
    if pts.is_empty() {
        return Ok(Polytope::empty(ambient));
    }
    if pts.len() == 1 {
        return Ok(Polytope {
            ambient,
            vertices: vec![LatticePoint(pts.pop().unwrap())],
            dim: 0,
            facets: Vec::new(),
            dir_basis: Vec::new(),
        });
    }

    let diffs: Vec<Row> = pts[1..].iter().map(|p| sub_vec(p, &pts[0])).collect();
    let dir_basis = saturate(&diffs, ambient);
    let d = dir_basis.len();
    if d == 0 {
        return Err(Error::internal("distinct points with zero-dimensional hull"));
    }

    if d == ambient {
        let (work, vidx) = full_dim_hull(&pts, d)?;
        let vertices = vidx.iter().map(|&i| LatticePoint(pts[i].clone())).collect();
        let facets = work
            .into_iter()
            .map(|f| FacetIneq { normal: Covector(f.w), offset: f.c })
            .collect();
        let identity: Vec<Row> = (0..ambient)
            .map(|i| {
                let mut e = vec![BigInt::zero(); ambient];
                e[i] = BigInt::from(1);
                e
            })
            .collect();
        return Ok(Polytope { ambient, vertices, dim: d as i64, facets, dir_basis: identity });
    }

    // Lower-dimensional: map into intrinsic lattice coordinates. The basis is
    // saturated, so every difference has integer coordinates in it.
    let intrinsic: Vec<Row> = pts
        .iter()
        .map(|p| solve_left_integer(&dir_basis, &sub_vec(p, &pts[0])))
        .collect::<Result<_>>()?;
    let mut order: Vec<usize> = (0..intrinsic.len()).collect();
    order.sort_by(|&a, &b| intrinsic[a].cmp(&intrinsic[b]));
    let ipts: Vec<Row> = order.iter().map(|&i| intrinsic[i].clone()).collect();
    let (work, vidx) = full_dim_hull(&ipts, d)?;
    let vertices: Vec<LatticePoint> = {
        let mut v: Vec<Row> = vidx.iter().map(|&i| pts[order[i]].clone()).collect();
        v.sort();
        v.into_iter().map(LatticePoint).collect()
    };

    // Lift each intrinsic facet normal w to an ambient covector u with
    // B u = lambda w, lambda > 0; the offset is recovered from the vertices.
    let mut facets = Vec::new();
    for f in work {
        let sol = solve_rational(&dir_basis, &f.w)
            .ok_or_else(|| Error::internal("facet normal does not lift to the ambient space"))?;
        let denoms: BigInt = sol.iter().fold(BigInt::from(1), |acc, q| {
            let d = q.denom();
            let g = num_integer::Integer::gcd(&acc, d);
            &acc / g * d
        });
        debug_assert!(denoms.is_positive());
        let scale = num_rational::BigRational::from_integer(denoms);
        let u: Row = primitivize(&sol.iter().map(|q| (q * &scale).to_integer()).collect::<Vec<_>>());
        let vals: Vec<BigInt> = vertices.iter().map(|v| dot(&u, &v.0)).collect();
        let c = vals.iter().min().unwrap().clone();
        facets.push(FacetIneq { normal: Covector(u), offset: c });
    }
    facets.sort_by(|a, b| (&a.normal.0, &a.offset).cmp(&(&b.normal.0, &b.offset)));
    facets.dedup();
    Ok(Polytope { ambient, vertices, dim: d as i64, facets, dir_basis })
}
