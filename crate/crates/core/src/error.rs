use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-domain input.
    #[error("invalid input: {0}")]
    Input(String),

    /// A JSON document failed to deserialize; `path` points at the offending node.
    #[error("parse error at `{path}`: {message}")]
    Parse { path: String, message: String },

    /// A configured enumeration or order bound was exceeded.
    #[error("resource bound exceeded: {0}")]
    Resource(String),

    /// An internal identity that must hold by construction did not.
    #[error("consistency failure: {0}")]
    Logic(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn logic(msg: impl Into<String>) -> Self {
        Error::Logic(msg.into())
    }
}
