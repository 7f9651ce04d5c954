//! A shared work budget for enumeration-heavy computations.
//!
//! Every search loop that can in principle blow up (functor enumeration,
//! transformation enumeration, congruence closure) charges its inner steps
//! against a [`Budget`]. When the budget runs out the computation aborts with
//! [`Error::Budget`] instead of hanging, so callers always get either a
//! certified answer or an explicit resource failure.

use crate::error::{Error, Result};
use std::cell::Cell;

/// Default number of elementary search steps allowed per top-level call.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A countdown of elementary enumeration steps.
#[derive(Debug)]
pub struct Budget {
    remaining: Cell<u64>,
    initial: u64,
}

impl Budget {
    pub fn new(steps: u64) -> Self {
        Budget {
            remaining: Cell::new(steps),
            initial: steps,
        }
    }

    /// Charge `n` steps, failing once the budget is exhausted.
    pub fn charge(&self, n: u64, what: &str) -> Result<()> {
        let r = self.remaining.get();
        if r < n {
            return Err(Error::Budget(format!(
                "{what} exceeded the budget of {} steps",
                self.initial
            )));
        }
        self.remaining.set(r - n);
        Ok(())
    }

    /// Steps still available.
    pub fn remaining(&self) -> u64 {
        self.remaining.get()
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_exhausts() {
        let b = Budget::new(10);
        assert!(b.charge(7, "test").is_ok());
        assert!(b.charge(4, "test").is_err());
        assert!(b.charge(3, "test").is_ok());
        assert_eq!(b.remaining(), 0);
    }
}
