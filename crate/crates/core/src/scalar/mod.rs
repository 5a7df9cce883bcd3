//! Exact arithmetic tower: rationals, polynomials in the two pole
//! parameters, and their fraction field.

mod field;
mod gcd;
mod param;
mod parse;
mod poly;
pub mod rational;
mod unipoly;

pub use field::Field;
pub use gcd::poly_gcd;
pub use param::ParamScalar;
pub use parse::parse_scalar;
pub use poly::{Monomial, Param, ParamPoly};
pub use rational::{parse_rational, render_rational, Rational};
pub use unipoly::UniPoly;
