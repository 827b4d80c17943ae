use thiserror::Error;

use crate::rootdata::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{family:?}{rank} is not a valid root system")]
    InvalidRank { family: Family, rank: usize },

    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight has {found} coefficients but the root datum has rank {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("operation requires type A, got {0:?}")]
    NotTypeA(Family),

    #[error("rank {rank} is too small: the window lemmas need k = floor((r-1)/2) >= 1")]
    RankTooSmall { rank: usize },

    /// A quoted hypothesis of a lemma does not hold for the input.
    #[error("hypothesis `{hypothesis}` violated: {detail}")]
    Hypothesis { hypothesis: String, detail: String },

    #[error("enumeration exceeded the cap of {cap} entries")]
    CapExceeded { cap: usize },

    #[error("{0} is neither 0 nor a prime")]
    InvalidCharacteristic(u64),

    #[error("partition is not {p}-regular: part {part} occurs {multiplicity} times")]
    NotRegular { p: u64, part: u32, multiplicity: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("unknown function name `{0}`")]
    UnknownFunction(String),
}

impl Error {
    pub(crate) fn hypothesis(hypothesis: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Hypothesis {
            hypothesis: hypothesis.into(),
            detail: detail.into(),
        }
    }
}
