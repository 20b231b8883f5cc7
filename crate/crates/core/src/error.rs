use thiserror::Error;

/// Errors raised by path construction, classification and the bijections.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("step {step} is not allowed by profile {profile}")]
    StepNotAllowed { step: String, profile: String },

    /// The input does not belong to the set an operation is defined on.
    #[error("{0}")]
    Domain(String),

    #[error("index {index} out of range ({len} available)")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("n = {n} and m = {m} are not coprime")]
    NotCoprime { n: u64, m: u64 },

    /// Malformed parameters or ranges supplied by a caller.
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
