use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed sequence: {0}")]
    Format(String),

    #[error("binding error: {0}")]
    Binding(String),
}

pub type Result<T> = std::result::Result<T, Error>;
