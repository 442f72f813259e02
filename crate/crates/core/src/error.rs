use thiserror::Error;

use crate::model::Vertex;

/// A line-numbered diagnostic produced while reading the text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected header `h <n> <m>`, found {found:?}")]
    MalformedHeader { line: usize, found: String },
    #[error("input has no header line")]
    MissingHeader,
    #[error("line {line}: header declares n = 0, at least one vertex is required")]
    NoVertices { line: usize },
    #[error("line {line}: expected edge line `e v1 v2 ...`, found {found:?}")]
    MalformedEdge { line: usize, found: String },
    #[error("line {line}: vertex {vertex} out of range 0..{n}")]
    VertexOutOfRange { line: usize, vertex: u64, n: usize },
    #[error("line {line}: edge has {size} vertices, at least 2 are required")]
    EdgeTooSmall { line: usize, size: usize },
    #[error("line {line}: repeated vertex {vertex} within edge")]
    RepeatedVertex { line: usize, vertex: Vertex },
    #[error(
        "line {line}: edge count mismatch, header declares {declared} edges but {found} were read"
    )]
    EdgeCountMismatch {
        line: usize,
        declared: usize,
        found: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("a hypergraph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range 0..{n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge {index} has {size} vertices, at least 2 are required")]
    EdgeTooSmall { index: usize, size: usize },
    #[error("edge {index} repeats vertex {vertex}")]
    RepeatedVertex { index: usize, vertex: Vertex },
    #[error("hypergraph has no edges")]
    NoEdges,
    #[error("the layered boundary operators require a uniform hypergraph")]
    NotUniform,
    #[error("vertex {vertex} is not in the chosen vertex set")]
    NotInSet { vertex: Vertex },
    #[error("source and sink must differ (both are {vertex})")]
    SameEndpoints { vertex: Vertex },
    #[error("edge-connectivity needs at least 2 vertices, found {n}")]
    TooFewVertices { n: usize },
    #[error("{what} is limited to n <= {limit}, found n = {n}")]
    GuardExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("hypergraph is disconnected")]
    Disconnected,
    #[error("permutation has length {found}, expected {expected}")]
    PermutationLength { expected: usize, found: usize },
    #[error("image sequence is not a bijection on 0..{n}")]
    NotAPermutation { n: usize },
    #[error("permutation {index} in the list is not an automorphism")]
    NotAnAutomorphism { index: usize },
    #[error("automorphism count exceeds the cap of {cap}")]
    AutomorphismCapExceeded { cap: usize },
    #[error("k must be an odd prime, got {k}")]
    NotOddPrime { k: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
