//! Zeta function of the monodromy at infinity, read off the Newton polytope.
//!
//! For f with only isolated singularities the factored form determines the
//! Euler characteristic of the generic fiber and every Lefschetz number of
//! the big loop around the bifurcation set, so none of the fibrations have
//! to be built: all three quantities below come from lattice geometry alone.

use monozeta::polyio::parse_polynomial;
use monozeta::zetacore::{euler_generic_fiber, lefschetz_numbers, zeta_at_infinity};

fn main() -> monozeta::Result<()> {
    let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();

    for text in [
        "x - x^2*y",        // zeta 1: the monodromy at infinity acts trivially
        "x*(x^2*y^2 - 1)",  // zeta (1-t)^-1 despite a smooth generic fiber
        "x^2 + y^3",
        "x^3 + y^3 + x*y",
    ] {
        let f = parse_polynomial(text, &vars)?;
        let z = zeta_at_infinity(&f)?;
        let chi = euler_generic_fiber(&f)?;
        let l: Vec<String> = lefschetz_numbers(&z, 6).iter().map(|v| v.to_string()).collect();
        println!("f = {text}");
        println!("  zeta at infinity : {z}");
        println!("  chi(generic fiber): {chi}");
        println!("  L^1..L^6         : {}", l.join(" "));
    }
    Ok(())
}
