//! Work budgets for the exponential searches.
//!
//! A [`Budget`] is a node limit handed to a single operation; the operation
//! counts its own search nodes and gives up with [`BudgetExceeded`] instead of
//! ever returning an approximate answer.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Budget(pub u64);

impl Budget {
    pub const UNLIMITED: Budget = Budget(u64::MAX);

    pub fn nodes(limit: u64) -> Self {
        Budget(limit)
    }

    pub(crate) fn meter(self) -> Meter {
        Meter { left: self.0 }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget(50_000_000)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("work budget exceeded")]
pub struct BudgetExceeded;

/// Call-local countdown created from a [`Budget`].
#[derive(Debug)]
pub(crate) struct Meter {
    left: u64,
}

impl Meter {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.spend(1)
    }

    #[inline]
    pub(crate) fn spend(&mut self, work: u64) -> Result<(), BudgetExceeded> {
        if self.left < work {
            self.left = 0;
            return Err(BudgetExceeded);
        }
        self.left -= work;
        Ok(())
    }
}
