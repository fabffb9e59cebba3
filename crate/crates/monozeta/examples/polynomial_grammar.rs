//! The input grammar: +, -, *, ^ with nonnegative integer exponents,
//! parentheses, integer and rational coefficients, and named variables.
//! Multiplication is never implicit. Parse errors carry byte offsets.

use monozeta::polyio::parse_polynomial;

fn main() {
    let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();

    for text in [
        "x - x^2*y",
        "(x + y)*(x + y) - 2*x*y",
        "1/2*x^4 - y + 7",
        "(1 - x)*(y - 1)",
    ] {
        let f = parse_polynomial(text, &vars).unwrap();
        println!("{text:<28} -> support {:?}, constant term {}", f.support(), f.constant_term());
    }

    for text in ["x + @", "x y", "x^-2", "z + 1"] {
        let err = parse_polynomial(text, &vars).unwrap_err();
        println!("{text:<28} -> {err}");
    }
}
