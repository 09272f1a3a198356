use crate::trigraph::VertexId;

/// Library-level error type. The CLI maps each variant onto a distinct
/// process exit code, so the classification here is part of the contract.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A precondition on user-supplied parameters was violated.
    #[error("usage: {0}")]
    Usage(String),

    /// Malformed input text (trigraph file or DIMACS CNF).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The instance exceeds a size guard for an exact routine.
    #[error("capacity: {0}")]
    Capacity(String),

    /// The solver requires a bull-free input; carries the offending witness.
    #[error("input is not bull-free: bull on vertices {0:?}")]
    NotBullFree(Vec<VertexId>),

    /// An internal consistency check failed (would contradict a proven
    /// equivalence, e.g. a repaired set projecting below the clause count).
    #[error("internal consistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
}
