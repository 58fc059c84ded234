use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed input text. `location` names a byte offset for graph6 and a
    /// 1-based line number for edge lists.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// A precondition on the mathematical input was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// The numerical method failed to reach its stopping criterion.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Input exceeds a hard limit of the requested procedure.
    #[error("refused: {0}")]
    Refused(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn at_byte(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            location: format!("byte {offset}"),
            message: msg.into(),
        }
    }

    pub(crate) fn at_line(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            location: format!("line {line}"),
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
