use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation: images are not a bijection")]
    InvalidPermutation,
    #[error("permutation is not an involution")]
    NotInvolution,
    #[error("invalid partition: parts must be positive")]
    InvalidPartition,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("query exceeds the feasibility cap (degree {degree}, {branch_points} branch points); estimated search space {estimate}")]
    Infeasible {
        degree: usize,
        branch_points: usize,
        estimate: String,
    },
    #[error("invalid monodromy graph: {0}")]
    InvalidGraph(String),
    #[error("graph does not match the query")]
    GraphQueryMismatch,
    #[error("edge coloring violates the real coloring rules")]
    InvalidColoring,
    #[error("{0}/{1} is not a dyadic rational")]
    NotDyadic(String, String),
    #[error("evaluation point lies on a wall")]
    OnWall,
    #[error("points are not in adjacent chambers")]
    NotAdjacentChambers,
    #[error("{0} ends exceed the tree enumeration limit of {1}")]
    TooManyEnds(usize, usize),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("edge is an end, not an internal edge")]
    NotInternalEdge,
}

pub type Result<T> = std::result::Result<T, Error>;
