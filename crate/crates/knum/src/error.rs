use thiserror::Error;

use crate::graph::VertexId;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(VertexId),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(VertexId),

    #[error("self-loop at `{0}`")]
    SelfLoop(VertexId),

    #[error("duplicate edge {{`{0}`, `{1}`}}")]
    DuplicateEdge(VertexId, VertexId),

    #[error("duplicate arc (`{0}`, `{1}`)")]
    DuplicateArc(VertexId, VertexId),

    #[error("{what} would have {actual} vertices, limit is {limit}")]
    SizeLimit {
        what: String,
        limit: u64,
        actual: u64,
    },

    #[error("graph has {actual} vertices; canonical labeling is limited to {limit}")]
    TooLargeForCanonical { actual: usize, limit: usize },

    #[error("coordinate {value} out of range 1..={q} at position {position}")]
    CoordinateOutOfRange { value: u32, q: u32, position: usize },

    #[error("tuple length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{members:?} is not a clique: {reason}")]
    NotAClique { members: Vec<VertexId>, reason: String },

    #[error("edge {{`{0}`, `{1}`}} lies in more than one maximal clique")]
    EdgeInMultipleCliques(VertexId, VertexId),

    #[error("edge {{`{0}`, `{1}`}} is not covered by the clique family")]
    EdgeNotCovered(VertexId, VertexId),

    #[error("clique family does not match the maximal cliques of the host: {0}")]
    FamilyMismatch(String),

    #[error("certificate is malformed: {0}")]
    MalformedCertificate(String),

    #[error("digraph is not a witness for the stated graph: {0}")]
    NotAWitness(String),

    #[error("base certificate cannot be lifted: {0}")]
    NonConformingBase(String),

    #[error("solver accepts at most {limit} vertices, got {actual}")]
    SolverBound { limit: usize, actual: usize },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(String),

    #[error("enumeration of {actual} subsets exceeds the cap of {cap}; raise the cap to force it")]
    EnumerationCap { actual: u128, cap: u128 },

    #[error("census classification found an unexpected structure: {0}")]
    PatternMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
