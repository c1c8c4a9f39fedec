use thiserror::Error;

use crate::bigraph::Edge;
use crate::cycles::CycleDefect;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{{{u}, {v}}} is not an edge of a balanced bipartite graph with n = {n}")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("edge {0} is not present in the graph")]
    MissingEdge(Edge),

    /// The input does not satisfy a precondition of the check, e.g. too few edges.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("invalid cycle certificate: {0}")]
    InvalidCycle(CycleDefect),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Something that should be impossible if the library is correct.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
