use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Family parameters outside the supported range.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// The instance is larger than the configured size cap.
    #[error("size cap exceeded: {0}")]
    SizeCap(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// An identity that must hold exactly did not.
    #[error("verification failed [{check}]: {detail}")]
    Verification { check: String, detail: String },

    #[error("vector is not in V_1: {0}")]
    NotInV1(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn verification(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Verification {
            check: check.into(),
            detail: detail.into(),
        }
    }
}
