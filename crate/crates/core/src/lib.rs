//! Small tropical (max-plus) circuits for Schur, skew-Schur and Stanley
//! symmetric polynomials, together with exhaustive checks of the
//! combinatorics that makes them small.

pub mod bridge;
pub mod circuits;
pub mod combinatorics;
pub mod error;
pub mod newton;
pub mod sympoly;
pub mod tropical;

pub use error::{Error, Result};
