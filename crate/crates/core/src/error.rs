use num_bigint::BigInt;
use thiserror::Error;

use crate::denominations::DenominationError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Denominations(#[from] DenominationError),

    #[error("work estimate {work} exceeds the configured bound {limit}")]
    ResourceLimit { work: u128, limit: u64 },

    #[error("index {index} is beyond the oracle limit {limit}")]
    OracleLimitExceeded { index: u64, limit: u64 },

    #[error("symbolic expansions exist only for indices 1..=5, got {0}")]
    UnsupportedIndex(u64),

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("denominator constant term {0} is not a unit")]
    NonUnitConstantTerm(BigInt),

    #[error("no run of {run} consecutive representable amounts found below index {bound}")]
    SearchLimitExceeded { bound: u64, run: u64 },
}

impl Error {
    /// True for the errors that come from a configured budget rather than
    /// from bad input.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::ResourceLimit { .. }
                | Error::OracleLimitExceeded { .. }
                | Error::SearchLimitExceeded { .. }
        )
    }
}
