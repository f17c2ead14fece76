use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent input (bad graph, bad certificate, bad parameters).
    #[error("input error: {0}")]
    Input(String),
    /// A search or enumeration exceeded its configured budget.
    #[error("budget exceeded: {what} (reached {reached})")]
    Budget { what: String, reached: usize },
    /// Parse failure with a location hint.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    /// A condition the library guarantees did not hold.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
