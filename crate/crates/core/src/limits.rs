use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Environment variable overriding [`Limits::max_items`].
pub const CAP_ENV: &str = "MATCHSTAT_CAP";

/// Size guards for enumeration-heavy operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest set of matchings (or sequences) materialized or scanned.
    pub max_items: u64,
    /// Largest `n` for checks quadratic in `|ℳ(n)|`.
    pub max_pairwise_n: usize,
    /// Largest tree depth explored by brute-force level checks.
    pub max_depth: usize,
}

impl Default for Limits {
    fn default() -> Self {
        // (2·7−1)!! = 135135
        Limits { max_items: 135_135, max_pairwise_n: 4, max_depth: 3 }
    }
}

impl Limits {
    /// Defaults, with `max_items` taken from `MATCHSTAT_CAP` when it parses.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(CAP_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            limits.max_items = cap;
        }
        limits
    }

    pub fn unbounded() -> Self {
        Limits { max_items: u64::MAX, max_pairwise_n: usize::MAX, max_depth: usize::MAX }
    }

    pub fn with_max_items(mut self, max_items: u64) -> Self {
        self.max_items = max_items;
        self
    }

    pub(crate) fn guard(&self, what: &str, required: &BigUint) -> Result<()> {
        if *required > BigUint::from(self.max_items) {
            return Err(Error::CapExceeded {
                what: what.to_string(),
                required: required.to_string(),
                cap: self.max_items,
            });
        }
        Ok(())
    }

    pub(crate) fn guard_value(&self, what: &str, value: usize, max: usize) -> Result<()> {
        if value > max {
            return Err(Error::CapExceeded {
                what: what.to_string(),
                required: value.to_string(),
                cap: max as u64,
            });
        }
        Ok(())
    }
}
