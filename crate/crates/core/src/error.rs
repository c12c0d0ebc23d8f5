use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("truncation did not stabilize: {0}")]
    Unstable(String),

    #[error("not expressible in the requested basis: {0}")]
    NotExpressible(String),

    #[error("basis identification failed: {0}")]
    IdentificationFailed(String),

    #[error("interval structure violated: {0}")]
    IntervalViolated(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("json error: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
