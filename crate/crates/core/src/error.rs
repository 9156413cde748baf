use thiserror::Error;

use crate::graphs::Certificate;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A point, edge or vertex does not belong to the space it is used with.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported space: {0}")]
    UnsupportedSpace(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("capacity exceeded: {what} needs n <= {cap}, got {n}")]
    Capacity {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("parse error at {token}: {message}")]
    Parse { token: String, message: String },

    #[error("graph is not unit interval: found {:?}", .0.kind)]
    NotUnitInterval(Certificate),

    /// A construction that is guaranteed to succeed did not. Never silently
    /// papered over.
    #[error("internal error: {0}")]
    Internal(String),

    /// A randomized check contradicted a proven statement; the payload is a
    /// replay description.
    #[error("theorem falsification event: {0}")]
    TheoremFalsification(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            message: message.into(),
        }
    }
}
