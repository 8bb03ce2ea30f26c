use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("letter {letter} out of range 1..={n}")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("invalid index pair ({i},{j}): need 1 <= i < j")]
    InvalidPair { i: usize, j: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("not a transposition")]
    NotATransposition,

    #[error("repeated index in ({0},{1},{2})")]
    RepeatedIndex(usize, usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("oracle size guard exceeded: n = {n} > {limit} (raise CTRLPERM_ORACLE_MAX_N to override)")]
    SizeGuard { n: usize, limit: usize },

    #[error("generator {index} is not a signed sum of disjoint standard basis elements: {reason}")]
    NotDecomposable { index: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
