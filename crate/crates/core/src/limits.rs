/// Budgets that keep dense, exact computations from running away.
///
/// Work is measured in abstract units: one unit is roughly one big-integer
/// addition or multiplication of window entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest coin value accepted by the parser (the mask is dense).
    pub max_denomination: u64,
    /// Upper bound on the work units any single query may request.
    pub max_work: u64,
    /// Largest index the enumeration oracles will accept.
    pub oracle_index: u64,
    /// Index bound for the Frobenius search; `None` means
    /// `smallest * largest`.
    pub search_bound: Option<u64>,
}

impl Limits {
    pub const DEFAULT_MAX_DENOMINATION: u64 = 10_000;
    pub const DEFAULT_MAX_WORK: u64 = 2_000_000_000;
    pub const DEFAULT_ORACLE_INDEX: u64 = 24;

    pub fn with_max_work(self, max_work: u64) -> Self {
        Limits { max_work, ..self }
    }

    pub(crate) fn check_work(&self, work: u128) -> crate::Result<()> {
        if work > u128::from(self.max_work) {
            Err(crate::Error::ResourceLimit {
                work,
                limit: self.max_work,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_oracle(&self, index: u64) -> crate::Result<()> {
        if index > self.oracle_index {
            Err(crate::Error::OracleLimitExceeded {
                index,
                limit: self.oracle_index,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_denomination: Self::DEFAULT_MAX_DENOMINATION,
            max_work: Self::DEFAULT_MAX_WORK,
            oracle_index: Self::DEFAULT_ORACLE_INDEX,
            search_bound: None,
        }
    }
}
