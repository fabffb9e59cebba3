//! Jump of the Euler characteristic at the central fiber.
//!
//! The jump measures how much the fiber over the constant term of f differs
//! from the generic fiber. In two variables the singular points of the
//! reduced central curve enter through their Milnor numbers and local zeta
//! functions; in any dimension the toric part of the jump needs only the
//! Milnor numbers of the singular points inside the big torus.

use monozeta::polyio::parse_polynomial;
use monozeta::zetacore::{jumping_number_2d, jumping_number_nd, SingularDatum, ZetaFunction};

fn main() -> monozeta::Result<()> {
    let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();

    // Central fiber x(1 - xy) = 0 is smooth but disconnected; the whole jump
    // comes from the atypical behaviour at infinity.
    let f = parse_polynomial("x - x^2*y", &vars)?;
    println!("x - x^2*y        jump = {}", jumping_number_2d(&f, &[])?);
    println!("                 (toric route gives {})", jumping_number_nd(&f, &[])?);

    // Central fiber x*(y - x^2) = 0: a line and a parabola crossing in one
    // node. The 2-variable formula wants the local zeta function and Milnor
    // number of each singular point of the reduced central curve.
    let g = parse_polynomial("x*y - x^3", &vars)?;
    let node = SingularDatum {
        local_zeta: ZetaFunction::one(),
        milnor_number: 1,
    };
    println!("x*y - x^3        jump = {}", jumping_number_2d(&g, &[node])?);

    let vars3: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let h = parse_polynomial("x*y*z + x", &vars3)?;
    println!("x*y*z + x        jump = {}", jumping_number_nd(&h, &[])?);
    Ok(())
}
