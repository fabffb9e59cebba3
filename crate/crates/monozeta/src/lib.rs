//! Monodromy zeta functions of polynomial maps from Newton-polytope data.
//!
//! Everything is computed by exact lattice geometry over arbitrary-precision
//! integers: no floating point, no randomization, byte-identical output for
//! identical input.

pub mod cizeta;
pub mod cli;
pub mod error;
pub mod exactlat;
pub mod newton;
pub mod polyio;
pub mod zetacore;

pub use error::{Error, Result};
