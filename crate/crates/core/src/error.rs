use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has {0} vertices; at least 2 are required")]
    Trivial(usize),

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("coloring: {0}")]
    Coloring(String),

    #[error("order {order} exceeds the limit of {limit}")]
    GuardExceeded { order: usize, limit: usize },

    #[error("block {block} is not solvable: {reason}")]
    Unsolvable { block: String, reason: String },

    #[error("classification refused: block {block} {reason}")]
    GateFailure { block: String, reason: String },

    #[error("catalog {path}: {msg}")]
    Catalog { path: String, msg: String },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            msg: msg.into(),
        }
    }
}
