use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("stability violation: n = {n} must exceed m = {m}")]
    StabilityViolation { n: usize, m: usize },

    #[error("stability violation at target level: n = {n} must exceed m + 1 = {}", .m + 1)]
    TargetStabilityViolation { n: usize, m: usize },

    #[error("not top-dimensional: exponents sum to {sum}, expected {expected}")]
    NotTopDimensional { sum: usize, expected: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid moduli space: genus-zero space needs at least 3 points, got {0}")]
    InvalidModuliSpace(usize),

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("cache line {line}: {message}")]
    Cache { line: usize, message: String },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
