use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop at vertex {0} (edge {1}) is not allowed")]
    Loop(VertexId, EdgeId),
    #[error("duplicate edge-id {0}")]
    DuplicateEdge(EdgeId),
    #[error("duplicate vertex-id {0}")]
    DuplicateVertex(VertexId),
    #[error("unknown edge-id {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex-id {0}")]
    UnknownVertex(VertexId),
    #[error("disconnected")]
    Disconnected,
    #[error("trivial")]
    Trivial,
    #[error("line graph requires simple base")]
    NotSimple,
    #[error("transition not in graph: {0}")]
    NotATransition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex ids are not contiguous from 0; cannot serialize")]
    NonContiguous,
    #[error("line-graph vertex {0} is not on the cycle")]
    NotOnCycle(EdgeId),
    #[error("cycle is not Euler tour compatible at line-graph vertex {0}")]
    NotEtc(EdgeId),
    #[error("cycle {cycle} is not Euler tour compatible at {vertex} ({side} side)")]
    SpliceNotEtc {
        cycle: usize,
        vertex: EdgeId,
        side: &'static str,
    },
    #[error("not an Euler tour: {0}")]
    NotATour(String),
    #[error("cycle-count mismatch: {0} vs {1}")]
    CycleCountMismatch(usize, usize),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("no decomposition possible: line graph is not regular of even degree")]
    NoDecompositionPossible,
    #[error("no Euler tour exists")]
    NoEulerTour,
    #[error("mislabeled family: {0}")]
    Mislabeled(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
