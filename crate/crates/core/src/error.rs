use thiserror::Error;

/// Errors raised by the combinatorial, polynomial and circuit layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid skew shape: {0}")]
    InvalidShape(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error(
        "dominance order compares partitions of one size, got |mu| = {left} and |lambda| = {right}"
    )]
    SizeMismatch { left: u64, right: u64 },

    #[error("letter {letter} is not a simple transposition of S_{m}")]
    LetterOutOfRange { letter: u32, m: usize },

    #[error("not symmetric")]
    NotSymmetric,

    #[error("not homogeneous")]
    NotHomogeneous,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("partition with {parts} parts does not fit in {nvars} variables")]
    TooManyParts { parts: usize, nvars: usize },

    #[error("zero polynomial has no tropicalization")]
    ZeroPolynomial,

    #[error("empty point set")]
    EmptyPointSet,

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("not a skew (vexillary-type) diagram")]
    NotSkewDiagram,

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
