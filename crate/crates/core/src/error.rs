use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("plethysm f[g] requires g to have a zero constant term")]
    NonZeroConstantTerm,

    #[error("degree {n} exceeds the truncation degree {truncation}")]
    DegreeOutOfRange { n: usize, truncation: usize },

    #[error("coefficient of p{partition} times z is {value}, expected a nonnegative integer")]
    NonIntegerCoefficient { partition: Partition, value: String },

    #[error("count for {family} at n = {n} evaluated to {value}, expected a nonnegative integer")]
    NonIntegerCount {
        family: String,
        n: usize,
        value: String,
    },

    #[error("{what}: n = {n} exceeds the configured limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
