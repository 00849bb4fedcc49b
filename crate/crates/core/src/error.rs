use thiserror::Error;

/// Every failure the library reports. Numeric routines never return a
/// silently truncated value: they fail with one of these instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series did not converge within {terms} terms")]
    NonConvergent { terms: usize },
    #[error("denominator parameter is a pole at term {index}")]
    PoleInDenominator { index: usize },
    #[error("gamma function pole at {0}")]
    GammaPole(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("moment functional is not regular: Hankel determinant D_{0} vanishes")]
    NonRegular(usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("family {0} has no tilde generating function")]
    UnsupportedTilde(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown theorem or identity id: {0}")]
    UnknownTheorem(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("insufficient data: {0}")]
    Insufficient(String),
    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
