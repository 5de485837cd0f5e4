use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u64, u64),
    #[error("p must be an odd prime (got {0})")]
    NotOddPrime(i64),
    #[error("element has infinite order")]
    InfiniteOrder,
    #[error("not a unit: norm {0}")]
    NotUnit(String),
    #[error("division by h^{0} failed: p-order is {1}")]
    NotDivisible(u64, String),
    #[error("unknown catalog link: {0}")]
    UnknownLink(String),
    #[error("skipped: budget ({0})")]
    Budget(String),
}
