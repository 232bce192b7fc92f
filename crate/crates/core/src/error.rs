use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid type spec `{0}`")]
    InvalidType(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("node {node} out of range for rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("element is not in the slice N: {0}")]
    NotInSlice(String),
    #[error("ad(n) is not nilpotent within {0} steps")]
    NotNilpotent(usize),
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("unsupported triple: {0}")]
    UnsupportedTriple(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("not spherical: {0}")]
    NotSpherical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
