//! Budgeted, optionally parallel exhaustive search.
//!
//! Work is split over the outermost quantifier only. Results are reduced by
//! enumeration index, so the reported witness is the first one in
//! enumeration order no matter how many workers ran.

use rayon::prelude::*;

use crate::error::CheckError;

/// Default cap on relation evaluations per check.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Maximum number of relation evaluations a check may perform.
    pub budget: u64,
    pub workers: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            budget: DEFAULT_BUDGET,
            workers: 1,
        }
    }
}

impl CheckOptions {
    pub fn with_budget(self, budget: u64) -> Self {
        CheckOptions { budget, ..self }
    }

    pub fn with_workers(self, workers: usize) -> Self {
        CheckOptions { workers, ..self }
    }

    pub(crate) fn ensure(&self, projected: u64) -> Result<(), CheckError> {
        if projected > self.budget {
            Err(CheckError::UniverseTooLarge {
                projected,
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    /// Options for the next stage of a multi-stage check after `spent`
    /// evaluations have been used.
    pub(crate) fn after(&self, spent: u64) -> Self {
        CheckOptions {
            budget: self.budget.saturating_sub(spent),
            ..*self
        }
    }

    fn install<R: Send>(&self, job: impl FnOnce() -> R + Send) -> Result<R, CheckError> {
        if self.workers <= 1 {
            return Ok(job());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| CheckError::Pool(e.to_string()))?;
        Ok(pool.install(job))
    }

    /// First `(index, witness)` in `items` order for which `test` reports a
    /// violation.
    pub(crate) fn first_violation<T, W, F>(
        &self,
        items: &[T],
        test: F,
    ) -> Result<Option<(usize, W)>, CheckError>
    where
        T: Sync,
        W: Send,
        F: Fn(&T) -> Option<W> + Sync,
    {
        if self.workers <= 1 {
            return Ok(items
                .iter()
                .enumerate()
                .find_map(|(i, t)| test(t).map(|w| (i, w))));
        }
        self.install(|| {
            items
                .par_iter()
                .enumerate()
                .find_map_first(|(i, t)| test(t).map(|w| (i, w)))
        })
    }

    /// `items.map(f)` in order.
    pub(crate) fn map_all<T, R, F>(&self, items: &[T], f: F) -> Result<Vec<R>, CheckError>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        if self.workers <= 1 {
            return Ok(items.iter().map(f).collect());
        }
        self.install(|| items.par_iter().map(f).collect())
    }
}

/// `a * b` for projected counts, saturating.
pub(crate) fn product(a: usize, b: usize) -> u64 {
    (a as u64).saturating_mul(b as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_violation_is_order_independent() {
        let items: Vec<u32> = (0..10_000).collect();
        let test = |x: &u32| (x % 977 == 3 || x % 1301 == 5).then_some(*x);
        for workers in [1, 2, 4, 8] {
            let opts = CheckOptions::default().with_workers(workers);
            let hit = opts.first_violation(&items, test).unwrap();
            assert_eq!(hit, Some((3, 3)));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let opts = CheckOptions::default().with_budget(10);
        assert!(opts.ensure(10).is_ok());
        assert_eq!(
            opts.ensure(11),
            Err(CheckError::UniverseTooLarge {
                projected: 11,
                budget: 10
            })
        );
        assert_eq!(opts.after(4).budget, 6);
        assert_eq!(opts.after(40).budget, 0);
    }

    #[test]
    fn map_all_keeps_order() {
        let items: Vec<u32> = (0..1000).collect();
        let opts = CheckOptions::default().with_workers(3);
        assert_eq!(
            opts.map_all(&items, |x| x * 2).unwrap(),
            items.iter().map(|x| x * 2).collect::<Vec<_>>()
        );
    }
}
