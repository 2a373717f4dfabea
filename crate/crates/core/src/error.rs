use thiserror::Error;

use crate::polygon::Edge;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(u32),

    #[error("expected {expected} diagonals for an {m}-gon, got {found}")]
    DiagonalCount {
        m: u32,
        expected: usize,
        found: usize,
    },

    #[error("vertex {vertex} is out of range for an {m}-gon")]
    VertexOutOfRange { vertex: u32, m: u32 },

    #[error("{0} is not a diagonal (degenerate or hull edge)")]
    NotADiagonal(Edge),

    #[error("diagonal {0} listed twice")]
    DuplicateDiagonal(Edge),

    #[error("diagonals {0} and {1} cross")]
    Crossing(Edge, Edge),

    #[error("{0} is not an edge of the triangulation")]
    MissingEdge(Edge),

    #[error("{0} is not a common diagonal of the pair")]
    NotCommon(Edge),

    #[error("triangulations have different vertex counts ({0} vs {1})")]
    MismatchedSize(u32, u32),

    #[error("polygon size {m} exceeds the brute-force limit of {limit}")]
    SizeLimit { m: u32, limit: u32 },

    #[error("flip sequence is not replayable at step {step}: {edge} is not a diagonal")]
    NotReplayable { step: usize, edge: Edge },

    #[error("no solution within the per-part budget cap {cap}")]
    CapExceeded { cap: u32 },

    #[error("the instance has no flip budget `k`")]
    MissingBudget,

    #[error("malformed tree: {0}")]
    Tree(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
