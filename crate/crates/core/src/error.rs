use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {partition} has {rows} rows, more than the local dimension {d}")]
    TooManyRows {
        partition: String,
        rows: usize,
        d: usize,
    },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("edge ({0}, {1}) is not valid for a graph on {2} vertices")]
    EdgeOutOfRange(usize, usize, usize),

    #[error("operator is not invariant under the flip F")]
    NotFlipInvariant,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("operators do not commute")]
    NotCommuting,

    #[error("dimension d^n = {dimension} exceeds the dense-matrix budget {budget}")]
    BudgetExceeded { dimension: u128, budget: u128 },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("the affine family is unbounded below")]
    Unbounded,

    #[error("eigensolver did not converge: {0}")]
    NoConvergence(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
