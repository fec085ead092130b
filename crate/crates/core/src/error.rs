use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("vector length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("the curve is not reduced")]
    NotReduced,
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("diagnostic: {0}")]
    Diagnostic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
