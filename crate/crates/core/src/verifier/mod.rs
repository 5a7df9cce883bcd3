//! Independent checks: symbolic derivative and ODE residual, linear
//! independence, a high-precision numerical integration cross-check, and
//! the comparison against the printed formulas.

pub mod audit;
pub mod numeric;
pub(crate) mod printed;
mod residual;
pub mod zfunc;

pub use residual::{differentiate, independence, residual, superpose, IndependenceReport, ResidualReport};
pub use zfunc::{PoleExpansion, ZPoly, ZRational};
