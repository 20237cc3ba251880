use thiserror::Error;

/// Errors raised by sequence validation and the analyses built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence is not nonincreasing at position {position} ({prev} < {next})")]
    NotSorted {
        position: usize,
        prev: i64,
        next: i64,
    },
    #[error("term {value} at position {position} is outside 0..={max}")]
    TermOutOfRange {
        position: usize,
        value: i64,
        max: i64,
    },
    #[error("sequence length {0} exceeds the supported bound of {max}", max = crate::MAX_LEN)]
    TooLong(usize),
    #[error("invalid vertex pair ({i}, {j}) for n = {n}; need 1 <= i < j <= n")]
    BadPair { i: usize, j: usize, n: usize },
    #[error("sequence is not graphic")]
    NotGraphic,
    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("creation sequence is empty")]
    EmptyCreation,
    #[error(
        "no k >= 1 with an Erdős–Gallai difference of at most 1; sequence forces nothing to lift"
    )]
    NoForcedStructure,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
