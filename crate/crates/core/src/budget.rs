//! Explicit enumeration and search caps.

use serde::{Deserialize, Serialize};

/// Caps on exhaustive work. Exceeding one is a hard
/// [`Error::BudgetExceeded`](crate::Error::BudgetExceeded), never a silent
/// truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Point and plane enumeration: `q^{ℓ(r+1)}` and Gaussian binomials.
    pub max_points: u64,
    /// Exhaustive tuple enumeration: `q^{(k+1)·dim S_d}`.
    pub max_enum: u64,
    /// Random search attempts per search call.
    pub max_trials_search: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_points: 20_000_000, max_enum: 1 << 24, max_trials_search: 10_000 }
    }
}
