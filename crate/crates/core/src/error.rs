use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation caps differ: {left} vs {right}")]
    CapMismatch { left: usize, right: usize },

    #[error("symmetric degrees differ: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("{what} requires n >= {min}, got n = {n}")]
    InvalidDegree { what: &'static str, n: usize, min: usize },

    #[error("cap {cap} exceeds the largest admissible cap {max} for n = {n}")]
    CapTooLarge { n: usize, cap: usize, max: usize },

    #[error("cache holds ch M_k only for k <= {have}, but n = {need} was requested")]
    CacheMiss { have: usize, need: usize },

    #[error("cache entries must be inserted in order: expected n = {expected}, got n = {got}")]
    CacheOrder { expected: usize, got: usize },

    #[error("coefficient of s{partition} in q-degree {degree} is {value}, expected a nonnegative integer")]
    NotSchurPositive {
        partition: Partition,
        degree: usize,
        value: String,
    },

    #[error("division failed for {what} at n = {n}: {reason}")]
    DivisionFailed {
        what: &'static str,
        n: usize,
        reason: String,
    },

    #[error("{0}")]
    Graph(String),
}

pub type Result<T> = std::result::Result<T, Error>;
