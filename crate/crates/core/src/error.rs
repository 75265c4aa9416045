use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty graph input")]
    EmptyInput,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: node {node} is outside 1..={node_count}")]
    NodeOutOfRange {
        line: usize,
        node: i64,
        node_count: usize,
    },
    #[error("line {line}: self-loop on node {node}")]
    SelfLoop { line: usize, node: usize },
    #[error("node count must be positive")]
    NoNodes,
    #[error("{count} nodes exceeds the limit of {cap}")]
    TooManyNodes { count: usize, cap: usize },
    #[error("cycle graph needs at least 3 nodes, got {0}")]
    CycleTooSmall(usize),
    #[error("node subset must be nonempty")]
    EmptySubset,
    #[error("node subset {mask:#b} is not contained in 1..={node_count}")]
    SubsetOutOfRange { mask: u32, node_count: usize },
    #[error("the full node set indexes no facet")]
    FullSubset,
    #[error("graph is not connected")]
    Disconnected,
    #[error("a single-node graph has no facet vectors")]
    SingleNode,
    #[error("malformed building set: {0}")]
    BadBuildingSet(String),
    #[error("vector dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vector {0:?} is not in the set")]
    NotAMember(Vec<i64>),
    #[error("vector set is not centrally symmetric")]
    NotCentrallySymmetric,
    #[error("invalid Dynkin type {family}{rank}")]
    InvalidType { family: char, rank: usize },
    #[error("arithmetic overflow")]
    Overflow,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
