//! Exact construction and verification of the rational basis solutions of
//! the three-dimensional KZ system `dW/dz = -2 (P1/(z - z1) + P2/(z - z2)) W`
//! with `P1`, `P2` the transpositions (1 2) and (1 3).

pub mod chains;
pub mod error;
pub mod linalg;
pub mod model;
pub mod pipeline;
pub mod residue;
pub mod scalar;
pub mod series;
pub mod verifier;

pub use error::{KzError, Result};
