use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A request exceeded one of the enforced size bounds.
    #[error("resource limit exceeded: {what} = {value}, bound is {bound}")]
    ResourceLimit {
        what: &'static str,
        value: i64,
        bound: i64,
    },

    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("weight mismatch: expected {expected}, got {actual}")]
    WeightMismatch { expected: usize, actual: usize },

    /// A quantity that must be an integer had a nontrivial denominator.
    #[error("expected an integer for {context}, got {value}")]
    NonIntegral { context: String, value: String },

    #[error("character and plethysm methods disagree at {partition}: characters={characters}, plethysm={plethysm}")]
    MethodDisagreement {
        partition: Partition,
        characters: u64,
        plethysm: u64,
    },

    /// An internal cross-check failed.
    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),

    #[error("cache I/O error: {0}")]
    Cache(String),
}

impl Error {
    pub(crate) fn limit(what: &'static str, value: usize, bound: usize) -> Self {
        Error::ResourceLimit {
            what,
            value: value as i64,
            bound: bound as i64,
        }
    }
}
