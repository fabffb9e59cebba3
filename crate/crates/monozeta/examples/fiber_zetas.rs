//! Zeta functions along individual fibers: the generic one, atypical special
//! ones, and the central fiber over the constant term, assembled two ways.
//!
//! f = x - x^2*y is the standard example of a polynomial that is trivial at
//! infinity yet has an atypical value: the fiber over 0 is disconnected.
//! Route A multiplies the generic zeta by a correction factor supported on
//! the non-convenient coordinate subspaces; route B evaluates the finite
//! part directly from the bifurcation polyhedron of f. Both give the same
//! answer whenever both apply.

use std::str::FromStr;

use num_rational::BigRational;

use monozeta::polyio::parse_polynomial;
use monozeta::zetacore::{
    correction_factor, zeta_central_fiber_smooth, zeta_fiber_nondegenerate,
    zeta_finite_part_smooth, Route,
};

fn main() -> monozeta::Result<()> {
    let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
    let f = parse_polynomial("x - x^2*y", &vars)?;

    println!("f = x - x^2*y");
    println!("  correction factor     : {}", correction_factor(&f)?);
    println!("  finite part of zeta^0 : {}", zeta_finite_part_smooth(&f)?);
    println!("  central fiber, route A: {}", zeta_central_fiber_smooth(&f, Route::A)?);
    println!("  central fiber, route B: {}", zeta_central_fiber_smooth(&f, Route::B)?);

    for c in ["1", "-3/2"] {
        let value = BigRational::from_str(c).unwrap();
        println!("  fiber over {c:>4}       : {}", zeta_fiber_nondegenerate(&f, &value)?);
    }

    // Here every fiber is smooth, so the central zeta is (1-t)^chi.
    let g = parse_polynomial("x^2 + y^2 - 1", &vars)?;
    println!("g = x^2 + y^2 - 1");
    println!("  central fiber, route A: {}", zeta_central_fiber_smooth(&g, Route::A)?);
    println!("  central fiber, route B: {}", zeta_central_fiber_smooth(&g, Route::B)?);
    Ok(())
}
