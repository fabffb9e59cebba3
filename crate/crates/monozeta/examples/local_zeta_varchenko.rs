//! Local monodromy zeta function at the origin from compact faces of the
//! Newton polyhedron, for germs that are non-degenerate there.

use monozeta::polyio::parse_polynomial;
use monozeta::zetacore::{varchenko_local_zeta, zeta_degree};

fn main() -> monozeta::Result<()> {
    let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();

    for (text, name) in [
        ("x^2 + y^3", "cusp"),
        ("x*y", "node"),
        ("x", "smooth germ"),
        ("x^2 + y^5", "A_4"),
        ("x^2*y + y^4", "D-type"),
    ] {
        let f = parse_polynomial(text, &vars)?;
        let z = varchenko_local_zeta(&f)?;
        // Degree of the zeta function as a rational function in t; for an
        // isolated singularity this is 1 - mu by the Milnor fibration.
        println!("{name:<12} {text:<12} zeta_0 = {z}   deg = {}", zeta_degree(&z));
    }
    Ok(())
}
