//! Normalized lattice volumes, mixed volumes, and the toric Euler
//! characteristic of a generic complete intersection (the signed mixed
//! volume sum behind the Bernstein bound).

use num_bigint::BigInt;

use monozeta::exactlat::{convex_hull, mixed_volume, normalized_volume, LatticePoint};
use monozeta::zetacore::bkk_euler;

fn pts(rows: &[&[i64]]) -> Vec<LatticePoint> {
    rows.iter().map(|r| LatticePoint::from_i64s(r)).collect()
}

fn main() -> monozeta::Result<()> {
    let simplex = convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]]), 2)?;
    let double = convex_hull(&pts(&[&[0, 0], &[2, 0], &[0, 2]]), 2)?;
    let square = convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]), 2)?;

    println!("Vol(simplex)        = {}", normalized_volume(&simplex)?);
    println!("Vol(2*simplex)      = {}", normalized_volume(&double)?);
    println!("Vol(unit square)    = {}", normalized_volume(&square)?);

    // MV(P,P) recovers Vol(P); the off-diagonal value counts solutions of a
    // generic system with these Newton polytopes, here a line and a conic.
    println!("MV(simplex,simplex) = {}", mixed_volume(&[simplex.clone(), simplex.clone()])?);
    println!("MV(simplex,2*simplex) = {}", mixed_volume(&[simplex.clone(), double.clone()])?);
    println!("MV(simplex,square)  = {}", mixed_volume(&[simplex.clone(), square])?);

    // chi inside the torus of a generic curve with polytope d*simplex:
    // a degree-d curve loses its 3d axis points, leaving chi = -d^2.
    for d in 1..=4i64 {
        let dd = convex_hull(&pts(&[&[0, 0], &[d, 0], &[0, d]]), 2)?;
        println!("bkk chi, degree {d} curve = {}", bkk_euler(&[dd], 2)?);
    }

    let segment = convex_hull(&pts(&[&[0], &[5]]), 1)?;
    assert_eq!(bkk_euler(&[segment], 1)?, BigInt::from(5));
    Ok(())
}
