use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("corpus not found: {0}")]
    CorpusNotFound(PathBuf),

    #[error("category directory is empty: {0}")]
    EmptyCategory(PathBuf),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("dataset too small to split: {0} document(s), need at least 2")]
    TooSmall(usize),

    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("document is empty after preprocessing")]
    EmptyInstance,

    #[error("surrogate normal equations are singular")]
    SingularFit,

    #[error("parse error in {origin} line {line}: {message}")]
    Parse {
        origin: String,
        line: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            context: context.into(),
            source,
        }
    }

    pub(crate) fn parse(origin: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            origin: origin.into(),
            line,
            message: message.into(),
        }
    }
}
