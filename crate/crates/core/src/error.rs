use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not invertible over {0}")]
    NotInvertible(&'static str),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unsupported genus {genus}: {reason}")]
    UnsupportedGenus { genus: usize, reason: String },

    #[error("generator {generator} is not defined on {surface}")]
    UnknownGenerator { generator: String, surface: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error("malformed matrix document: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn genus(genus: usize, reason: impl Into<String>) -> Self {
        Error::UnsupportedGenus {
            genus,
            reason: reason.into(),
        }
    }
}
