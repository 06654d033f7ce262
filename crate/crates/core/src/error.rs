use thiserror::Error;

/// Errors raised by the verification engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalar multiplication requires a real coefficient, got {0}")]
    NonRealScale(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid mass {0}: {1}")]
    InvalidMass(f64, &'static str),
    #[error("mass mismatch: {0} vs {1}")]
    MassMismatch(f64, f64),
    #[error("generator set is not linearly independent (rank {rank} of {len})")]
    DegenerateBasis { rank: usize, len: usize },
    #[error("element {0} is not in the span of the basis")]
    NotInSpan(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown operator set `{0}`")]
    UnknownSet(String),
    #[error("unknown table kind `{0}`")]
    UnknownTableKind(String),
    #[error("unknown output format `{0}`")]
    UnknownFormat(String),
    #[error("invalid fault specification `{0}`")]
    InvalidFault(String),
    #[error("invalid tolerance override `{0}`")]
    InvalidTolerance(String),
    #[error("construction check failed: {0}")]
    Construction(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("serialization error: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialization(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Serialization(e.to_string())
    }
}
