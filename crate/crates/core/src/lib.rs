//! Jacobian syzygies, defects and unexpected curves of reduced plane curves.
//!
//! All reported invariants are exact. Large eliminations run modulo word-size
//! primes, and every number derived from them is certified by exact
//! witnesses lifted back to the rationals.

pub mod arrangements;
pub mod classify;
pub mod error;
pub mod interpolation;
pub mod json;
pub mod linalg;
pub mod par;
pub mod poly;
pub mod saturation;
pub mod syzygy;

pub use error::{Error, Result};
pub use par::ExecMode;
