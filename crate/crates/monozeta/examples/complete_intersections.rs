//! Monodromy of a polynomial map F = (f_1, ..., f_k): C^n -> C^k along the
//! last coordinate, restricted to the common zeros of the first k-1.
//!
//! The map below cuts the circle x^2 + y^2 = s out of the affine line
//! x + y + 1 = 0; the zeta function at infinity and both fiber assemblies
//! are computed purely from the Newton polytopes of the components.

use num_rational::BigRational;

use monozeta::cizeta::{
    ci_central_candidates, euler_ci_generic_fiber, facets_outside_dual, subset_profile,
    zeta_ci_at_infinity, zeta_ci_fiber, FiberMode, PolyMap,
};
use monozeta::polyio::parse_polynomial;
use monozeta::zetacore::Route;

fn main() -> monozeta::Result<()> {
    let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
    let map = PolyMap::new(vec![
        parse_polynomial("x + y + 1", &vars)?,
        parse_polynomial("x^2 + y^2", &vars)?,
    ])?;

    println!("F = (x + y + 1, x^2 + y^2)");
    println!("  zeta at infinity : {}", zeta_ci_at_infinity(&map)?);
    println!("  chi(generic fiber): {}", euler_ci_generic_fiber(&map)?);

    let zero = BigRational::from_integer(0.into());
    for route in [Route::A, Route::B] {
        let z = zeta_ci_fiber(&map, &zero, FiberMode::Central, route)?;
        println!("  central fiber     : {z}   ({route:?})");
    }
    let z = zeta_ci_fiber(&map, &BigRational::from_integer(9.into()), FiberMode::Generic, Route::A)?;
    println!("  fiber over 9      : {z}");

    // The per-subset data behind those products.
    let s = [0, 1];
    let profile = subset_profile(&map, &s)?;
    println!("  S = {{1,2}} admissible: {} (m_S = {})", profile.admissible, profile.m_s);
    for facet in facets_outside_dual(&map, &s)? {
        println!(
            "    facet at infinity: normal {} distance {}",
            facet.face.normal, facet.d
        );
    }
    for cand in ci_central_candidates(&map, &s)? {
        println!(
            "    central candidate: w = {} e = {} L = {} [{}]",
            cand.w, cand.e, cand.l, cand.class
        );
    }
    Ok(())
}
