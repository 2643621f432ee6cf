use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} outside supported range 1..={1}")]
    OrderOutOfRange(usize, usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex sets overlap but are not identical")]
    OverlappingSets,
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("path length {0} outside supported range 1..=8")]
    PathLengthOutOfRange(usize),
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertices {u} and {v} have different degrees ({du} vs {dv})")]
    UnequalDegrees { u: usize, v: usize, du: usize, dv: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph contains an equal-degree path of length {0}")]
    NotPropertyFree(usize),
    #[error("lambda instance outside its domain: {0}")]
    LambdaDomain(String),
    #[error("lambda instance too large for exhaustive enumeration ({0} elements)")]
    LambdaTooLarge(usize),
    #[error("theorem check failed: {0}")]
    TheoremFalsified(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
