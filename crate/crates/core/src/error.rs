use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input that cannot be interpreted at all: wrong dimensions, bad
    /// syntax, dangling references.
    #[error("malformed input: {0}")]
    Structural(String),

    /// Well-formed input that violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// A computation that should have succeeded did not.
    #[error("computation failed: {0}")]
    Computation(String),

    #[error("basis of {size} tuples exceeds the configured limit of {limit}")]
    BasisLimit { size: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Structural(_) | Error::Io(_) => 2,
            Error::Domain(_) | Error::Computation(_) | Error::BasisLimit { .. } => 1,
        }
    }
}
