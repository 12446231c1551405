use std::time::Duration;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("element or subset belongs to a different group")]
    DomainMismatch,

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("the pattern set S must be nonempty")]
    EmptySet,

    #[error("subset is not a union of cosets of the given subgroup")]
    NotCosetUnion,

    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("{divisor} does not divide {value}")]
    Divisibility { divisor: u64, value: u64 },

    #[error("argument out of range: {0}")]
    Range(String),

    #[error("no avoiding set of size {target} found (restarts, repair and fallback exhausted)")]
    SearchExhausted { target: usize },

    #[error("group of order {size} exceeds the limit of {limit}")]
    SizeLimit { size: usize, limit: usize },

    #[error("solver budget exceeded after {nodes} nodes ({elapsed:?})")]
    BudgetExceeded { nodes: u64, elapsed: Duration },
}
