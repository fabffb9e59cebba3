//! Rational polyhedra `conv(points) + cone(rays)` via homogenization: the
//! polyhedron in R^n is encoded as the polytope `conv({0} u {(p,1)} u
//! {(r,0)})` in R^(n+1), whose facets through the origin carry exactly the
//! facet inequalities of the polyhedron.

use num_bigint::BigInt;
use num_traits::Zero;

use super::hull::{convex_hull, hull_any_dim, FacetIneq, Polytope, MAX_AMBIENT_DIM};
use super::matrix::{integer_kernel, rank, Row};
use super::num::{is_zero_vec, sub_vec};
use super::point::{Covector, LatticePoint, LatticeVector};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Polyhedron {
    pub(crate) ambient: usize,
    pub(crate) gen_points: Vec<LatticePoint>,
    pub(crate) gen_rays: Vec<LatticeVector>,
    pub(crate) dim: i64,
    pub(crate) facets: Vec<FacetIneq>,
    pub(crate) vertices: Vec<LatticePoint>,
    pub(crate) extreme_rays: Vec<LatticeVector>,
}

impl Polyhedron {
    pub fn empty(ambient: usize) -> Self {
        Polyhedron {
            ambient,
            gen_points: Vec::new(),
            gen_rays: Vec::new(),
            dim: -1,
            facets: Vec::new(),
            vertices: Vec::new(),
            extreme_rays: Vec::new(),
        }
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

    pub fn facets(&self) -> &[FacetIneq] {
        &self.facets
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn extreme_rays(&self) -> &[LatticeVector] {
        &self.extreme_rays
    }

    pub fn generator_points(&self) -> &[LatticePoint] {
        &self.gen_points
    }

    pub fn generator_rays(&self) -> &[LatticeVector] {
        &self.gen_rays
    }

    /// A facet is compact exactly when no recession direction stays on it.
    pub fn facet_is_compact(&self, f: &FacetIneq) -> bool {
        self.gen_rays.iter().all(|r| !f.normal.eval(r).is_zero())
    }

    /// The polytope carried by a compact facet.
    pub fn compact_facet_polytope(&self, f: &FacetIneq) -> Result<Polytope> {
        debug_assert!(self.facet_is_compact(f));
        let pts: Vec<LatticePoint> =
            self.gen_points.iter().filter(|p| f.tight_at(p)).cloned().collect();
        convex_hull(&pts, self.ambient)
    }

    /// Rational membership test.
    pub fn contains(&self, p: &LatticePoint) -> bool {
        if self.is_empty() || p.ambient_dim() != self.ambient {
            return false;
        }
        // Affine-hull membership is delegated to the facet system together
        // with the direction-space complement below.
        let dirs = self.direction_rows();
        let perp = integer_kernel(&dirs, self.ambient);
        let base = &self.gen_points[0];
        let t = sub_vec(&p.0, &base.0);
        if !perp.iter().all(|w| super::num::dot(w, &t).is_zero()) {
            return false;
        }
        self.facets.iter().all(|f| f.satisfied_by(p))
    }

    fn direction_rows(&self) -> Vec<Row> {
        let base = &self.gen_points[0];
        let mut rows: Vec<Row> =
            self.gen_points[1..].iter().map(|p| sub_vec(&p.0, &base.0)).collect();
        rows.extend(self.gen_rays.iter().map(|r| r.0.clone()));
        rows
    }
}

/// Build `conv(points) + cone(rays)`. An empty point list gives the empty
/// polyhedron regardless of rays.
pub fn polyhedron_hull(
    points: &[LatticePoint],
    rays: &[LatticeVector],
    ambient: usize,
) -> Result<Polyhedron> {
    if ambient > MAX_AMBIENT_DIM {
        return Err(Error::DimensionTooLarge(ambient));
    }
    for p in points.iter().chain(rays.iter()) {
        if p.ambient_dim() != ambient {
            return Err(Error::DimensionMismatch { expected: ambient, got: p.ambient_dim() });
        }
    }
    let mut gen_points: Vec<LatticePoint> = points.to_vec();
    gen_points.sort();
    gen_points.dedup();
    if gen_points.is_empty() {
        return Ok(Polyhedron::empty(ambient));
    }
    let mut gen_rays: Vec<LatticeVector> = rays
        .iter()
        .filter(|r| !r.is_zero())
        .map(|r| LatticePoint(super::num::primitivize(&r.0)))
        .collect();
    gen_rays.sort();
    gen_rays.dedup();

    // Homogenize.
    let mut hpts: Vec<LatticePoint> = Vec::with_capacity(gen_points.len() + gen_rays.len() + 1);
    hpts.push(LatticePoint::zero(ambient + 1));
    for p in &gen_points {
        let mut v = p.0.clone();
        v.push(BigInt::from(1));
        hpts.push(LatticePoint(v));
    }
    for r in &gen_rays {
        let mut v = r.0.clone();
        v.push(BigInt::zero());
        hpts.push(LatticePoint(v));
    }
    let q0 = hull_any_dim(&hpts, ambient + 1)?;

    let dim = q0.dim() - 1;
    let mut facets: Vec<FacetIneq> = Vec::new();
    for f in q0.facets() {
        if !f.offset.is_zero() {
            continue;
        }
        // Keep only facets tight at some height-1 generator: those are the
        // genuine facets of the polyhedron, and their truncated normals are
        // automatically primitive.
        let tight_point = gen_points.iter().any(|p| {
            let mut v = p.0.clone();
            v.push(BigInt::from(1));
            f.tight_at(&LatticePoint(v))
        });
        if !tight_point {
            continue;
        }
        let u: Row = f.normal.0[..ambient].to_vec();
        if is_zero_vec(&u) {
            continue;
        }
        let c = -f.normal.0[ambient].clone();
        facets.push(FacetIneq { normal: Covector(u), offset: c });
    }
    facets.sort_by(|a, b| (&a.normal.0, &a.offset).cmp(&(&b.normal.0, &b.offset)));
    facets.dedup();

    let poly = Polyhedron {
        ambient,
        gen_points,
        gen_rays,
        dim,
        facets,
        vertices: Vec::new(),
        extreme_rays: Vec::new(),
    };

    // Extreme points and rays, via active-constraint ranks (together with the
    // affine hull's implicit equalities).
    let dirs = poly.direction_rows();
    let perp = integer_kernel(&dirs, ambient);
    let mut vertices = Vec::new();
    for p in &poly.gen_points {
        let mut rows: Vec<Row> =
            poly.facets.iter().filter(|f| f.tight_at(p)).map(|f| f.normal.0.clone()).collect();
        rows.extend(perp.iter().cloned());
        if rank(&rows) == ambient {
            vertices.push(p.clone());
        }
    }
    let mut extreme_rays = Vec::new();
    for r in &poly.gen_rays {
        let mut rows: Vec<Row> = poly
            .facets
            .iter()
            .filter(|f| f.normal.eval(r).is_zero())
            .map(|f| f.normal.0.clone())
            .collect();
        rows.extend(perp.iter().cloned());
        if rank(&rows) + 1 == ambient {
            extreme_rays.push(r.clone());
        }
    }

    Ok(Polyhedron { vertices, extreme_rays, ..poly })
}
