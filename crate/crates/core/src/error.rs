use thiserror::Error;

/// Errors surfaced by the library and the command line front end.
#[derive(Debug, Error)]
pub enum Error {
    /// The caller passed an argument outside the documented range.
    #[error("usage error: {0}")]
    Usage(String),

    /// A mathematical precondition of an operation does not hold.
    #[error("domain error: {0}")]
    Domain(String),

    /// An invariant that the algorithm guarantees was found broken.
    #[error("internal consistency error: {0}")]
    Internal(String),

    /// An exhaustive search was asked to run beyond its size guard.
    #[error("refused: {0}")]
    Refused(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
