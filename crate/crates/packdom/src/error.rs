use thiserror::Error;

/// Errors shared across the crate.
///
/// `Inconsistency` is special: it marks a violated internal invariant of the
/// construction pipeline (something the underlying argument promises can
/// never happen on valid input). It carries enough context to reproduce the
/// failing instance.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex set universe {set} does not match graph order {graph}")]
    UniverseMismatch { set: usize, graph: usize },

    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge {
        u: usize,
        v: usize,
        reason: &'static str,
    },

    #[error("graph must be connected")]
    Disconnected,

    #[error("maximum degree {found} exceeds limit {limit}")]
    DegreeTooHigh { found: usize, limit: usize },

    #[error("vertex {vertex} has degree {degree}, but minimum degree 2 is required")]
    DegreeTooLow { vertex: usize, degree: usize },

    #[error("vertex {vertex} is not a source of the orientation")]
    NotASource { vertex: usize },

    #[error("set is not a packing")]
    NotAPacking,

    #[error("set is not a maximal packing")]
    NotMaximalPacking,

    #[error("graph on {n} vertices exceeds the search guard of {cap}")]
    GuardExceeded { n: usize, cap: usize },

    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),

    #[error("unknown graph name `{0}`")]
    UnknownName(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("internal consistency failure: {message}")]
    Inconsistency {
        message: String,
        context: Box<serde_json::Value>,
    },
}

impl Error {
    pub fn inconsistency(message: impl Into<String>, context: serde_json::Value) -> Self {
        Error::Inconsistency {
            message: message.into(),
            context: Box::new(context),
        }
    }

    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
