use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("d^{} composed with d^{} is nonzero at entry ({row}, {col})", degree + 1, degree)]
    NotAComplex { degree: i64, row: usize, col: usize },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("quotient ring is not finite-dimensional")]
    InfiniteDimensional,

    #[error("algebra is not local at the origin: variable `{0}` is not nilpotent")]
    NotLocal(String),

    #[error("algebra table check failed: {0}")]
    BadAlgebra(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("point {0} is not on the quadratic cone of the model")]
    OffCone(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
