//! Permanent and active elements of a predicted sequence over sliding windows.
//!
//! For time `t` and radius `d` the window is `[max(1, t−d), min(T, t+d)]`.
//! An element is active when some predicted request in the window touches it,
//! and permanent when it is present just before the window and untouched in it.

use std::collections::{BTreeMap, BTreeSet};

/// Effect of one predicted request on the element universe.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Touch<K> {
    /// Elements whose presence is set by the request.
    pub set: Vec<(K, bool)>,
    /// Elements touched without a presence change (for example queried ones).
    pub read: Vec<K>,
}

impl<K: Clone> Touch<K> {
    fn keys(&self) -> impl Iterator<Item = K> + '_ {
        self.set.iter().map(|(k, _)| k.clone()).chain(self.read.iter().cloned())
    }
}

/// Inclusive window bounds `(lo, hi)` for time `t`; empty when `hi < lo`.
pub fn window(t: usize, d: usize, horizon: usize) -> (usize, usize) {
    (t.saturating_sub(d).max(1), (t + d).min(horizon))
}

/// Doubling levels `0, 1, 2, 4, …` up to the first power of two `≥ max(2n, 1)`.
pub fn levels(n: usize) -> Vec<usize> {
    let top = (2 * n).max(1).next_power_of_two();
    let mut out = vec![0];
    let mut d = 1;
    while d <= top {
        out.push(d);
        d *= 2;
    }
    out
}

/// Event-list representation of the permanent and active sets at one radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowLevel<K> {
    pub d: usize,
    pub horizon: usize,
    pub initial_permanent: Vec<K>,
    pub initial_active: Vec<K>,
    /// `permanent_events[t]` turns the set at `t − 1` into the set at `t`.
    pub permanent_events: Vec<Vec<(K, bool)>>,
    pub active_events: Vec<Vec<(K, bool)>>,
}

impl<K: Ord + Clone> WindowLevel<K> {
    /// Builds the event lists in one sweep over the predicted effects.
    pub fn build(initial: &BTreeSet<K>, steps: &[Touch<K>], d: usize) -> Self {
        let horizon = steps.len();
        let mut touches: BTreeMap<K, usize> = BTreeMap::new();
        let mut before: BTreeSet<K> = initial.clone();
        let (mut lo, mut hi) = window(0, d, horizon);
        for s in &steps[..hi] {
            for k in s.keys() {
                *touches.entry(k).or_insert(0) += 1;
            }
        }
        let mut perm: BTreeSet<K> =
            before.iter().filter(|k| !touches.contains_key(*k)).cloned().collect();
        let mut active: BTreeSet<K> = touches.keys().cloned().collect();
        let initial_permanent = perm.iter().cloned().collect();
        let initial_active = active.iter().cloned().collect();
        let mut permanent_events = vec![Vec::new(); horizon + 1];
        let mut active_events = vec![Vec::new(); horizon + 1];
        for t in 1..=horizon {
            let (nlo, nhi) = window(t, d, horizon);
            let mut cand: BTreeSet<K> = BTreeSet::new();
            if nlo > lo {
                let s = &steps[lo - 1];
                for k in s.keys() {
                    let c = touches.get_mut(&k).expect("touched key present");
                    *c -= 1;
                    if *c == 0 {
                        touches.remove(&k);
                    }
                    cand.insert(k);
                }
                for (k, p) in &s.set {
                    if *p {
                        before.insert(k.clone());
                    } else {
                        before.remove(k);
                    }
                }
            }
            if nhi > hi {
                for k in steps[nhi - 1].keys() {
                    *touches.entry(k.clone()).or_insert(0) += 1;
                    cand.insert(k);
                }
            }
            lo = nlo;
            hi = nhi;
            for k in cand {
                let is_active = touches.contains_key(&k);
                let is_perm = !is_active && before.contains(&k);
                if is_active != active.contains(&k) {
                    active_events[t].push((k.clone(), is_active));
                    if is_active {
                        active.insert(k.clone());
                    } else {
                        active.remove(&k);
                    }
                }
                if is_perm != perm.contains(&k) {
                    permanent_events[t].push((k.clone(), is_perm));
                    if is_perm {
                        perm.insert(k);
                    } else {
                        perm.remove(&k);
                    }
                }
            }
        }
        WindowLevel { d, horizon, initial_permanent, initial_active, permanent_events, active_events }
    }

    /// Cursor positioned at `t = 0`.
    pub fn cursor(&self) -> WindowCursor<'_, K> {
        WindowCursor {
            level: self,
            t: 0,
            permanent: self.initial_permanent.iter().cloned().collect(),
            active: self.initial_active.iter().cloned().collect(),
        }
    }

    /// Total number of recorded events.
    pub fn event_count(&self) -> usize {
        self.permanent_events.iter().chain(&self.active_events).map(Vec::len).sum()
    }
}

/// Explicit permanent and active sets, advanced one step at a time.
#[derive(Debug, Clone)]
pub struct WindowCursor<'a, K> {
    level: &'a WindowLevel<K>,
    t: usize,
    pub permanent: BTreeSet<K>,
    pub active: BTreeSet<K>,
}

impl<K: Ord + Clone> WindowCursor<'_, K> {
    pub fn time(&self) -> usize {
        self.t
    }

    /// Moves to `t + 1`; returns `false` at the horizon.
    pub fn advance(&mut self) -> bool {
        if self.t >= self.level.horizon {
            return false;
        }
        self.t += 1;
        for (k, on) in &self.level.permanent_events[self.t] {
            if *on {
                self.permanent.insert(k.clone());
            } else {
                self.permanent.remove(k);
            }
        }
        for (k, on) in &self.level.active_events[self.t] {
            if *on {
                self.active.insert(k.clone());
            } else {
                self.active.remove(k);
            }
        }
        true
    }
}

/// Reference computation of the sets at time `t` straight from the definition.
pub fn window_sets_bruteforce<K: Ord + Clone>(
    initial: &BTreeSet<K>,
    steps: &[Touch<K>],
    d: usize,
    t: usize,
) -> (BTreeSet<K>, BTreeSet<K>) {
    let (lo, hi) = window(t, d, steps.len());
    let mut state = initial.clone();
    for s in &steps[..lo - 1] {
        for (k, p) in &s.set {
            if *p {
                state.insert(k.clone());
            } else {
                state.remove(k);
            }
        }
    }
    let active: BTreeSet<K> = if lo <= hi {
        steps[lo - 1..hi].iter().flat_map(|s| s.keys().collect::<Vec<_>>()).collect()
    } else {
        BTreeSet::new()
    };
    let perm = state.into_iter().filter(|k| !active.contains(k)).collect();
    (perm, active)
}
