//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },

    #[error("line {line}: malformed edge line, expected \"u v\"")]
    MalformedEdgeLine { line: usize },

    #[error("line {line}: vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },

    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: expected {expected} edge lines, found extra content")]
    TrailingContent { line: usize, expected: usize },

    #[error("edge list ended early: expected {expected} edges, found {found}")]
    MissingEdges { expected: usize, found: usize },

    #[error("graph order {n} exceeds the supported maximum of {max} vertices")]
    TooLarge { n: usize, max: usize },

    #[error("graph order {n} exceeds the vertex cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid family spec \"{0}\": {1}")]
    FamilySpec(String, String),

    #[error("family {0} requires a seed")]
    SeedRequired(String),

    #[error("no connected sample after {attempts} attempts (n={n}, p={p})")]
    ResampleLimit { attempts: usize, n: usize, p: f64 },

    #[error("edge set is not a tree: {0}")]
    NotATree(String),

    #[error("({u}, {v}) is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid plan: {0}")]
    InvalidPlan(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
