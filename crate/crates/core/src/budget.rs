/// Default number of search-node expansions before a search reports "unknown".
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// A counter of search-node expansions.
///
/// Budgets count work, not time, so an exhausted budget is reproducible on
/// every machine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    /// Records one expansion. Returns `false` once the limit is exceeded.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.used = self.used.saturating_add(1);
        self.used <= self.limit
    }

    /// Records `n` expansions performed elsewhere, e.g. by a worker thread.
    pub fn charge(&mut self, n: u64) {
        self.used = self.used.saturating_add(n);
    }

    pub fn exhausted(&self) -> bool {
        self.used > self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn remaining(&self) -> u64 {
        self.limit.saturating_sub(self.used)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}
