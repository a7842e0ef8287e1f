//! Incremental symmetric difference of two request prefixes.

use std::collections::BTreeMap;

use crate::request::Request;

/// Count change of one request in a tracker step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountChange {
    pub request: Request,
    pub before: i64,
    pub after: i64,
}

/// Signed multiset `ρ_{≤t} Δ ρ̂_{≤t}`: positive counts are surplus in `ρ`,
/// negative counts surplus in `ρ̂`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymDiffTracker {
    counts: BTreeMap<Request, i64>,
    size: u64,
}

impl SymDiffTracker {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sum of absolute counts.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn count(&self, r: &Request) -> i64 {
        self.counts.get(r).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<Request, i64> {
        &self.counts
    }

    fn add(&mut self, r: Request, delta: i64) -> CountChange {
        let before = self.count(&r);
        let after = before + delta;
        if after == 0 {
            self.counts.remove(&r);
        } else {
            self.counts.insert(r, after);
        }
        self.size = self.size - before.unsigned_abs() + after.unsigned_abs();
        CountChange { request: r, before, after }
    }

    /// Advances from step `t − 1` to `t`. Returns the changed entries.
    pub fn step(&mut self, actual: &Request, predicted: Option<&Request>) -> Vec<CountChange> {
        match predicted {
            Some(p) if p == actual => Vec::new(),
            Some(p) => vec![self.add(*actual, 1), self.add(*p, -1)],
            None => vec![self.add(*actual, 1)],
        }
    }
}
