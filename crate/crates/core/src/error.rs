use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The caller supplied something that is not a valid instance.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// An enumeration would exceed its configured size cap.
    #[error("{what} exceeds the configured cap of {cap} (instance is beyond desk scale)")]
    CapExceeded { what: &'static str, cap: u64 },

    /// An arithmetic invariant failed. Seeing this means there is a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
