//! Normalized lattice volumes and mixed volumes.
//!
//! `normalized_volume` is dim(P)! times the Euclidean volume of P measured in
//! the saturated lattice of its own affine hull, so a primitive segment has
//! volume 1 and the unit d-simplex has volume 1 in every dimension.

use num_bigint::BigInt;
use num_traits::Zero;

use super::hull::{convex_hull, Polytope};
use super::matrix::solve_left_integer;
use super::num::{add_vec, sub_vec};
use super::point::LatticePoint;
use crate::error::{Error, Result};

/// Re-embed a lower-dimensional polytope as a full-dimensional one in the
/// lattice coordinates of its affine hull.
fn intrinsic_copy(p: &Polytope) -> Result<Polytope> {
    let d = p.dim() as usize;
    let base = &p.vertices()[0].0;
    let ipts: Vec<LatticePoint> = p
        .vertices()
        .iter()
        .map(|v| solve_left_integer(p.dir_basis(), &sub_vec(&v.0, base)).map(LatticePoint))
        .collect::<Result<_>>()?;
    convex_hull(&ipts, d)
}

/// Normalized volume of P relative to its own dimension. Points have volume
/// 1, the empty polytope has volume 0. The affine lattice is re-saturated at
/// every recursion level, so lower-dimensional faces are measured correctly.
pub fn normalized_volume(p: &Polytope) -> Result<BigInt> {
    if p.is_empty() {
        return Ok(BigInt::zero());
    }
    if p.dim() == 0 {
        return Ok(BigInt::from(1));
    }
    if (p.dim() as usize) < p.ambient_dim() {
        return normalized_volume(&intrinsic_copy(p)?);
    }
    // Full-dimensional: pyramid decomposition over the first vertex. Each
    // facet at lattice distance h from the apex contributes h times its own
    // normalized volume.
    let v0 = &p.vertices()[0];
    let mut total = BigInt::zero();
    for f in p.facets() {
        let h = f.normal.eval(v0) - &f.offset;
        if h.is_zero() {
            continue;
        }
        let fverts: Vec<LatticePoint> =
            p.vertices().iter().filter(|v| f.tight_at(v)).cloned().collect();
        let fp = convex_hull(&fverts, p.ambient_dim())?;
        total += h * normalized_volume(&fp)?;
    }
    Ok(total)
}

/// Normalized d-dimensional volume: 0 when dim(P) < d, the normalized volume
/// when dim(P) == d. dim(P) > d is a logic error.
pub fn volume_as_dim(p: &Polytope, d: usize) -> Result<BigInt> {
    if p.dim() < d as i64 {
        return Ok(BigInt::zero());
    }
    if p.dim() > d as i64 {
        return Err(Error::internal(&format!(
            "asked for {}-dimensional volume of a {}-dimensional polytope",
            d,
            p.dim()
        )));
    }
    normalized_volume(p)
}

/// Minkowski sum. The sum with an empty polytope is empty.
pub fn minkowski_sum(a: &Polytope, b: &Polytope) -> Result<Polytope> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: a.ambient_dim(), got: b.ambient_dim() });
    }
    if a.is_empty() || b.is_empty() {
        return Ok(Polytope::empty(a.ambient_dim()));
    }
    let mut pts = Vec::with_capacity(a.vertices().len() * b.vertices().len());
    for u in a.vertices() {
        for v in b.vertices() {
            pts.push(LatticePoint(add_vec(&u.0, &v.0)));
        }
    }
    convex_hull(&pts, a.ambient_dim())
}

/// Mixed volume of n bodies in Z^n, normalized so that the diagonal gives
/// the normalized volume: MV(P,...,P) = normalized_volume(P). Computed by
/// inclusion-exclusion over sums of sub-collections; lower-dimensional sums
/// contribute zero.
pub fn mixed_volume(bodies: &[Polytope]) -> Result<BigInt> {
    let n = bodies.len();
    if n == 0 {
        return Err(Error::EmptyPointSet);
    }
    for b in bodies {
        if b.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: b.ambient_dim() });
        }
        if b.is_empty() {
            return Err(Error::EmptyPointSet);
        }
    }
    let mut acc = BigInt::zero();
    // Memoize partial Minkowski sums by subset bitmask.
    let mut sums: Vec<Option<Polytope>> = vec![None; 1usize << n];
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let p = if rest == 0 {
            bodies[low].clone()
        } else {
            minkowski_sum(sums[rest].as_ref().unwrap(), &bodies[low])?
        };
        let vol = volume_as_dim(&p, n)?;
        let sign = if (n - mask.count_ones() as usize) % 2 == 0 { 1 } else { -1 };
        acc += BigInt::from(sign) * vol;
        sums[mask] = Some(p);
    }
    let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
    let (q, r) = num_integer::Integer::div_rem(&acc, &fact);
    if !r.is_zero() {
        return Err(Error::internal("mixed volume inclusion-exclusion is not divisible by n!"));
    }
    Ok(q)
}
