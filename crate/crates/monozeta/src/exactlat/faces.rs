//! Supporting faces and face enumeration.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::hull::{convex_hull, Polytope};
use super::matrix::rank;
use super::num::{add_vec, is_zero_vec, primitivize, sub_vec};
use super::point::{Covector, LatticePoint, LatticeVector};
use super::polyhedron::Polyhedron;
use super::volume::normalized_volume;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

/// A face of a polytope or polyhedron together with the data every theorem
/// consumes: a supporting covector, the value it takes on the face, and the
/// normalized volume of the face in its own dimension.
///
/// `normal` is primitive for proper faces and zero for a whole body. `rays`
/// is empty except for unbounded polyhedron faces, whose `norm_volume` is 0
/// by convention (`polytope` then holds the hull of the face's generator
/// points, not the face itself).
#[derive(Debug, Clone)]
pub struct FaceData {
    pub polytope: Polytope,
    pub rays: Vec<LatticeVector>,
    pub dim: i64,
    pub normal: Covector,
    pub value: BigInt,
    pub norm_volume: BigInt,
}

impl FaceData {
    fn bounded(polytope: Polytope, normal: Covector, value: BigInt) -> Result<FaceData> {
        let norm_volume = normalized_volume(&polytope)?;
        Ok(FaceData {
            dim: polytope.dim(),
            rays: Vec::new(),
            polytope,
            normal,
            value,
            norm_volume,
        })
    }

    pub fn is_compact(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        self.polytope.vertices()
    }

    /// Distance of the face's affine span from the origin in lattice units.
    pub fn lattice_distance(&self) -> BigInt {
        self.value.abs()
    }
}

/// The face of a polytope where `w` attains its minimum (or maximum). The
/// returned data carries `w` primitivized; the value refers to that
/// primitive covector. A zero `w` supports the whole body.
pub fn supporting_face(p: &Polytope, w: &Covector, sense: Sense) -> Result<FaceData> {
    if p.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if w.ambient_dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            got: w.ambient_dim(),
        });
    }
    let u = if w.is_zero() {
        w.clone()
    } else {
        w.primitivized()
    };
    let vals: Vec<BigInt> = p.vertices().iter().map(|v| u.eval(v)).collect();
    let best = match sense {
        Sense::Min => vals.iter().min().unwrap().clone(),
        Sense::Max => vals.iter().max().unwrap().clone(),
    };
    let pts: Vec<LatticePoint> = p
        .vertices()
        .iter()
        .zip(&vals)
        .filter(|(_, v)| **v == best)
        .map(|(p, _)| p.clone())
        .collect();
    FaceData::bounded(convex_hull(&pts, p.ambient_dim())?, u, best)
}

/// The face of a polyhedron where `w` attains its minimum, as (generator
/// points, generator rays, value). Fails if `w` is unbounded below.
pub fn supporting_face_polyhedron(
    p: &Polyhedron,
    w: &Covector,
) -> Result<(Vec<LatticePoint>, Vec<LatticePoint>, BigInt)> {
    if p.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    for r in p.generator_rays() {
        if w.eval(r).is_negative() {
            return Err(Error::UnboundedDirection(format!("{}", w)));
        }
    }
    let best = p.generator_points().iter().map(|q| w.eval(q)).min().unwrap();
    let pts = p.generator_points().iter().filter(|q| w.eval(q) == best).cloned().collect();
    let rays = p.generator_rays().iter().filter(|r| w.eval(r).is_zero()).cloned().collect();
    Ok((pts, rays, best))
}

/// Facets of a polytope as face data (inner minimizing normals; the value is
/// the facet offset).
pub fn facet_data(p: &Polytope) -> Result<Vec<FaceData>> {
    let mut out = Vec::new();
    for f in p.facets() {
        let pts: Vec<LatticePoint> = p
            .vertices()
            .iter()
            .filter(|v| f.tight_at(v))
            .cloned()
            .collect();
        out.push(FaceData::bounded(
            convex_hull(&pts, p.ambient_dim())?,
            f.normal.clone(),
            f.offset.clone(),
        )?);
    }
    Ok(out)
}

/// Compact facets of a polyhedron (facets whose tight set contains no
/// recession ray), as face data.
pub fn compact_facet_data(q: &Polyhedron) -> Result<Vec<FaceData>> {
    let mut out = Vec::new();
    for f in q.facets() {
        if !q.facet_is_compact(f) {
            continue;
        }
        let pts: Vec<LatticePoint> = q
            .generator_points()
            .iter()
            .filter(|v| f.tight_at(v))
            .cloned()
            .collect();
        out.push(FaceData::bounded(
            convex_hull(&pts, q.ambient_dim())?,
            f.normal.clone(),
            f.offset.clone(),
        )?);
    }
    Ok(out)
}

/// All faces of the given dimension. The whole polytope counts as its own
/// face (zero normal); the empty face does not appear. Faces are sorted by
/// their vertex sets.
pub fn faces_of_dim(p: &Polytope, d: usize) -> Result<Vec<FaceData>> {
    if p.is_empty() {
        return Ok(Vec::new());
    }
    let dim = p.dim();
    if (d as i64) > dim {
        return Err(Error::FaceDimOutOfRange { d: d as i64, dim });
    }
    let n = p.ambient_dim();
    if d as i64 == dim {
        return Ok(vec![FaceData::bounded(
            p.clone(),
            Covector::zero(n),
            BigInt::zero(),
        )?]);
    }

    // Closure of facet vertex sets under intersection gives every proper
    // face's vertex set.
    let verts = p.vertices();
    let facet_sets: Vec<BTreeSet<usize>> = p
        .facets()
        .iter()
        .map(|f| (0..verts.len()).filter(|&i| f.tight_at(&verts[i])).collect())
        .collect();
    let mut all: BTreeSet<BTreeSet<usize>> = facet_sets.iter().cloned().collect();
    loop {
        let mut fresh: Vec<BTreeSet<usize>> = Vec::new();
        for a in &all {
            for b in &all {
                let c: BTreeSet<usize> = a.intersection(b).cloned().collect();
                if !c.is_empty() && !all.contains(&c) && !fresh.contains(&c) {
                    fresh.push(c);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        all.extend(fresh);
    }

    let mut out = Vec::new();
    for set in &all {
        let idx: Vec<usize> = set.iter().cloned().collect();
        let base = &verts[idx[0]].0;
        let diffs: Vec<Vec<BigInt>> =
            idx[1..].iter().map(|&i| sub_vec(&verts[i].0, base)).collect();
        if rank(&diffs) != d {
            continue;
        }
        let pts: Vec<LatticePoint> = idx.iter().map(|&i| verts[i].clone()).collect();
        // Canonical supporting covector: sum of the normals of every facet
        // containing the face, primitivized. It lies in the relative
        // interior of the face's normal cone, so it supports exactly this
        // face.
        let mut w = vec![BigInt::zero(); n];
        for (fi, fset) in facet_sets.iter().enumerate() {
            if set.is_subset(fset) {
                w = add_vec(&w, &p.facets()[fi].normal.0);
            }
        }
        if is_zero_vec(&w) {
            return Err(Error::internal("proper face has no containing facet"));
        }
        let w = Covector(primitivize(&w));
        let value = w.eval(&verts[idx[0]]);
        out.push(FaceData::bounded(convex_hull(&pts, n)?, w, value)?);
    }
    out.sort_by(|a, b| a.polytope.vertices().cmp(b.polytope.vertices()));
    Ok(out)
}

/// All faces of the given dimension of a polyhedron; unbounded faces count
/// their recession rays toward the dimension. With `compact_only`, only
/// faces containing no ray are returned.
pub fn polyhedron_faces_of_dim(
    q: &Polyhedron,
    d: usize,
    compact_only: bool,
) -> Result<Vec<FaceData>> {
    if q.is_empty() {
        return Ok(Vec::new());
    }
    let dim = q.dim();
    if (d as i64) > dim {
        return Err(Error::FaceDimOutOfRange { d: d as i64, dim });
    }
    let n = q.ambient_dim();
    let pts = q.generator_points();
    let rays = q.generator_rays();
    if d as i64 == dim {
        if compact_only && !rays.is_empty() {
            return Ok(Vec::new());
        }
        let polytope = convex_hull(pts, n)?;
        return Ok(vec![FaceData {
            dim,
            rays: rays.to_vec(),
            norm_volume: if rays.is_empty() {
                normalized_volume(&polytope)?
            } else {
                BigInt::zero()
            },
            polytope,
            normal: Covector::zero(n),
            value: BigInt::zero(),
        }]);
    }

    type Tight = (BTreeSet<usize>, BTreeSet<usize>);
    let facet_sets: Vec<Tight> = q
        .facets()
        .iter()
        .map(|f| {
            (
                (0..pts.len()).filter(|&i| f.tight_at(&pts[i])).collect(),
                (0..rays.len())
                    .filter(|&i| f.normal.eval(&rays[i]).is_zero())
                    .collect(),
            )
        })
        .collect();
    let mut all: BTreeSet<Tight> = facet_sets.iter().cloned().collect();
    loop {
        let mut fresh: Vec<Tight> = Vec::new();
        for a in &all {
            for b in &all {
                let c: Tight = (
                    a.0.intersection(&b.0).cloned().collect(),
                    a.1.intersection(&b.1).cloned().collect(),
                );
                if !c.0.is_empty() && !all.contains(&c) && !fresh.contains(&c) {
                    fresh.push(c);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        all.extend(fresh);
    }

    let mut out = Vec::new();
    for set in &all {
        if compact_only && !set.1.is_empty() {
            continue;
        }
        let pidx: Vec<usize> = set.0.iter().cloned().collect();
        let base = &pts[pidx[0]].0;
        let mut dirs: Vec<Vec<BigInt>> =
            pidx[1..].iter().map(|&i| sub_vec(&pts[i].0, base)).collect();
        dirs.extend(set.1.iter().map(|&i| rays[i].0.clone()));
        if rank(&dirs) != d {
            continue;
        }
        let mut w = vec![BigInt::zero(); n];
        for (fi, fset) in facet_sets.iter().enumerate() {
            if set.0.is_subset(&fset.0) && set.1.is_subset(&fset.1) {
                w = add_vec(&w, &q.facets()[fi].normal.0);
            }
        }
        if is_zero_vec(&w) {
            return Err(Error::internal("proper face has no containing facet"));
        }
        let w = Covector(primitivize(&w));
        let value = w.eval(&pts[pidx[0]]);
        let carrier: Vec<LatticePoint> = pidx.iter().map(|&i| pts[i].clone()).collect();
        let polytope = convex_hull(&carrier, n)?;
        out.push(FaceData {
            dim: d as i64,
            rays: set.1.iter().map(|&i| rays[i].clone()).collect(),
            norm_volume: if set.1.is_empty() {
                normalized_volume(&polytope)?
            } else {
                BigInt::zero()
            },
            polytope,
            normal: w,
            value,
        });
    }
    out.sort_by(|a, b| {
        (a.polytope.vertices(), &a.rays).cmp(&(b.polytope.vertices(), &b.rays))
    });
    Ok(out)
}
