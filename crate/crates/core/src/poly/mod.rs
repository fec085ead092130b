//! Homogeneous polynomials in x, y, z over the rationals.

pub mod dense;
pub mod map;
pub mod monomial;
pub mod parse;
pub mod point;
pub mod polynomial;
pub mod reduced;

pub use dense::DenseForm;
pub use map::PolynomialMap;
pub use monomial::{monomial_count, monomials, Monomial};
pub use parse::parse_polynomial;
pub use point::ProjectivePoint;
pub use polynomial::HomogeneousPolynomial;
pub use reduced::is_reduced_probabilistic;
