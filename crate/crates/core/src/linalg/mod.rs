//! Exact linear algebra: rational matrices, modular elimination and lifting.

pub mod lift;
pub mod matrix;
pub mod modular;
pub mod rational;

pub use matrix::{subspace_dimension, IntegerEchelon, RationalMatrix};
pub use rational::Rational;
