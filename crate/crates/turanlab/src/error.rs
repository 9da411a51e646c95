use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex out of range")]
    VertexOutOfRange,
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("unknown graph family: {0}")]
    UnknownFamily(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("byte {0:#x} outside printable graph6 range")]
    BadByte(u8),
    #[error("malformed length header")]
    BadHeader,
    #[error("input truncated: expected {expected} data bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing garbage after graph data")]
    TrailingGarbage,
    #[error("graph order {0} exceeds supported encoding tier")]
    TooLarge(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("pattern must have at least 2 vertices")]
    PatternTooSmall,
    #[error("empty constraint set")]
    EmptyConstraints,
    #[error("node budget of {0} exhausted")]
    BudgetExhausted(u64),
    #[error("time budget of {0} ms exhausted")]
    TimeExhausted(u64),
    #[error("exhaustive oracle supports n <= 6, got {0}")]
    OracleTooLarge(usize),
    #[error("graph too large for canonical form: {0} vertices")]
    CanonTooLarge(usize),
    #[error("edge branch-and-bound handles subgraph-mode constraints only")]
    InducedUnsupported,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime power in the supported range (2..=64)")]
    UnsupportedOrder(usize),
    #[error("subgroup order {t} does not divide {q} - 1")]
    BadSubgroupOrder { q: usize, t: usize },
}
