//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("loop edge ({0},{0}) is not allowed")]
    LoopEdge(u32),
    #[error("edge ({0},{1}) references a vertex >= n = {2}")]
    VertexOutOfRange(u32, u32, usize),
    #[error("result would have {0} vertices, over the vertex budget {1}")]
    Overflow(usize, usize),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("search exceeded the node budget of {0}")]
    NodeBudgetExceeded(u64),
    #[error("copy enumeration exceeded the limit of {0}")]
    CopyLimitExceeded(usize),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("graph is not bipartite with the given parts: {0}")]
    NotBipartite(String),
    #[error("bad substitution anchor: {0}")]
    BadAnchor(String),
    #[error("gluing would merge two edges: ({0},{1})")]
    EdgeOverlap(u32, u32),
    #[error("bad layer data: {0}")]
    BadLayer(String),
    #[error("tuple length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("no admissible slice through vertex {blocking} (directions used: {used:?})")]
    InsufficientSliceDegree { blocking: usize, used: Vec<usize> },
    #[error("optimizer failed to converge (best residual {0:.3e})")]
    NonConvergence(f64),
    #[error("input graph is not a tree: {0}")]
    NotATree(String),
    #[error("scheme not supported by this operation: {0}")]
    UnsupportedScheme(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid input file: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
