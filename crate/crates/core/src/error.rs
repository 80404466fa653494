use thiserror::Error;

use crate::graph::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("anti-parallel edges between {0} and {1}")]
    AntiParallel(usize, usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not a forest")]
    NotAForest,
    #[error("{0} {1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("digraph has a directed cycle")]
    Cyclic,
    #[error("vertex map is not a homomorphism: edge {0} {1} has no image")]
    NotAHomomorphism(usize, usize),
    #[error("vertex map has length {got}, expected {expected}")]
    MapLength { expected: usize, got: usize },
    #[error("vertex counts differ: {0} vs {1}")]
    VertexCountMismatch(usize, usize),
    #[error("subgraph pattern is odd")]
    OddPattern,
    #[error("subgraph pattern has no edges")]
    EdgelessPattern,
    #[error("edge set is not a subgraph of the host")]
    NotASubgraph,
    #[error("tree has no mirror-bridge")]
    NoMirrorBridge,
    #[error("tree is not recursively bridge-mirrored")]
    NotRbm,
    #[error("{what} too large: {value} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("pattern has {pattern} vertices but the host has only {host}")]
    PatternTooLarge { pattern: usize, host: usize },
    #[error("invalid tourneyon: {0}")]
    InvalidTourneyon(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
