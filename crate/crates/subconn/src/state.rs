//! Online vertex-set maintenance and queries.

use std::collections::BTreeSet;

use core_predictions::{Answer, Replay, Request, StepStats};
use fixedbitset::FixedBitSet;

use crate::error::{Result, SubConnError};
use crate::graph::Graph;
use crate::timeline::{
    agnostic_preprocess, apply, decode, Op, promise_preprocess, to_bits, LevelTables, SubConnTimeline,
};

/// Runtime view of one level: `Q = S ∖ P` and `|P ∖ S|`.
#[derive(Debug, Clone)]
struct LevelState {
    perm: FixedBitSet,
    active: FixedBitSet,
    q: BTreeSet<u32>,
    missing: usize,
}

/// Per-level outcome of the qualification test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Qualification {
    Ok,
    /// Some permanent vertex is absent from `S`.
    Missing,
    /// `|Q| > 4d + 2`.
    Large,
    /// Some vertex of `Q ∪ {u, v}` has no table.
    Inactive,
}

#[derive(Debug, Clone)]
pub struct SubConn {
    g: Graph,
    s: FixedBitSet,
    t: usize,
    timeline: SubConnTimeline,
    states: Vec<LevelState>,
    stats: StepStats,
}

impl SubConn {
    /// All levels of the doubling ladder.
    pub fn agnostic(g: Graph, s0: &BTreeSet<u32>, rhohat: &[Request]) -> Result<Self> {
        let timeline = agnostic_preprocess(&g, s0, rhohat)?;
        Ok(Self::with_timeline(g, s0, timeline))
    }

    /// A single known radius `d`.
    pub fn promise(g: Graph, s0: &BTreeSet<u32>, rhohat: &[Request], d: usize) -> Result<Self> {
        let level = promise_preprocess(&g, s0, rhohat, d)?;
        Ok(Self::with_timeline(g, s0, SubConnTimeline { levels: vec![level] }))
    }

    fn with_timeline(g: Graph, s0: &BTreeSet<u32>, timeline: SubConnTimeline) -> Self {
        let n = g.n();
        let s = to_bits(n, s0.iter().copied());
        let states = timeline
            .levels
            .iter()
            .map(|l| {
                let perm = to_bits(n, l.window.initial_permanent.iter().copied());
                let active = to_bits(n, l.window.initial_active.iter().copied());
                let q = s.difference(&perm).map(|v| v as u32).collect();
                let missing = perm.difference(&s).count();
                LevelState { perm, active, q, missing }
            })
            .collect();
        SubConn { g, s, t: 0, timeline, states, stats: StepStats::default() }
    }

    pub fn timeline(&self) -> &SubConnTimeline {
        &self.timeline
    }

    pub fn time(&self) -> usize {
        self.t
    }

    pub fn contains(&self, v: u32) -> bool {
        self.s.contains(v as usize)
    }

    pub fn vertex_set(&self) -> BTreeSet<u32> {
        self.s.ones().map(|v| v as u32).collect()
    }

    /// Residual set `Q` at level index `i`.
    pub fn residual(&self, i: usize) -> &BTreeSet<u32> {
        &self.states[i].q
    }

    /// Whether `P ⊆ S` at level index `i`.
    pub fn permanent_in_s(&self, i: usize) -> bool {
        self.states[i].missing == 0
    }

    fn set_vertex(&mut self, v: u32, on: bool) {
        self.s.set(v as usize, on);
        for st in &mut self.states {
            match (st.perm.contains(v as usize), on) {
                (true, true) => st.missing -= 1,
                (true, false) => st.missing += 1,
                (false, true) => {
                    st.q.insert(v);
                }
                (false, false) => {
                    st.q.remove(&v);
                }
            }
        }
    }

    fn advance(&mut self) {
        self.t += 1;
        let t = self.t;
        for (st, lvl) in self.states.iter_mut().zip(&self.timeline.levels) {
            if t > lvl.window.horizon {
                continue;
            }
            for &(v, on) in &lvl.window.permanent_events[t] {
                st.perm.set(v as usize, on);
                match (self.s.contains(v as usize), on) {
                    (true, true) => {
                        st.q.remove(&v);
                    }
                    (true, false) => {
                        st.q.insert(v);
                    }
                    (false, true) => st.missing += 1,
                    (false, false) => st.missing -= 1,
                }
            }
            apply(&mut st.active, &lvl.window.active_events[t]);
        }
    }

    /// Applies the next update.
    pub fn update(&mut self, v: u32, on: bool) -> Result<()> {
        self.g.check(v)?;
        match (self.contains(v), on) {
            (true, true) => return Err(SubConnError::Present(v)),
            (false, false) => return Err(SubConnError::Absent(v)),
            _ => {}
        }
        self.set_vertex(v, on);
        self.advance();
        self.stats = StepStats { probes: self.states.len() as u64, ..Default::default() };
        Ok(())
    }

    pub fn qualification(&self, i: usize, u: u32, v: u32) -> Qualification {
        let st = &self.states[i];
        let d = self.timeline.levels[i].d();
        if st.missing > 0 {
            Qualification::Missing
        } else if st.q.len() > 4 * d + 2 {
            Qualification::Large
        } else if st.q.iter().chain([&u, &v]).any(|&x| !st.active.contains(x as usize)) {
            Qualification::Inactive
        } else {
            Qualification::Ok
        }
    }

    /// Search on `Q ∪ {u, v}` with shortcut edges. Returns the answer and `|H|`.
    fn shortcut_search(&self, i: usize, u: u32, v: u32) -> (bool, usize) {
        let lvl: &LevelTables = &self.timeline.levels[i];
        let mut h: Vec<u32> = self.states[i].q.iter().copied().collect();
        for x in [u, v] {
            if !self.states[i].q.contains(&x) {
                h.push(x);
            }
        }
        let hv = h.len();
        let t = self.t;
        let target = h.iter().position(|&x| x == v).expect("v in H");
        let src = h.iter().position(|&x| x == u).expect("u in H");
        let mut seen = vec![false; hv];
        seen[src] = true;
        let mut stack = vec![src];
        while let Some(a) = stack.pop() {
            for b in 0..hv {
                if seen[b] {
                    continue;
                }
                let (x, y) = (h[a], h[b]);
                let edge = self.g.has(x, y) || lvl.connected(x, y, t).expect("active vertex has a table");
                if edge {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        (seen[target], hv)
    }

    fn check_query(&self, u: u32, v: u32) -> Result<()> {
        for x in [u, v] {
            self.g.check(x)?;
            if !self.contains(x) {
                return Err(SubConnError::Absent(x));
            }
        }
        Ok(())
    }

    /// Query at the single promise level; fails when its preconditions do not hold.
    pub fn promise_query(&mut self, u: u32, v: u32) -> Result<bool> {
        self.check_query(u, v)?;
        if self.qualification(0, u, v) != Qualification::Ok {
            return Err(SubConnError::PromiseBroken { d: self.timeline.levels[0].d() });
        }
        let (ans, hv) = self.shortcut_search(0, u, v);
        self.stats = StepStats {
            probes: hv as u64,
            dstar: Some(self.timeline.levels[0].d()),
            errset: self.states[0].q.len(),
            ..Default::default()
        };
        Ok(ans)
    }

    /// Query at the smallest qualifying level, or by full search.
    pub fn query(&mut self, u: u32, v: u32) -> Result<bool> {
        self.check_query(u, v)?;
        let first = (0..self.states.len()).find(|&i| self.qualification(i, u, v) == Qualification::Ok);
        let ans = match first {
            Some(i) => {
                let (ans, hv) = self.shortcut_search(i, u, v);
                self.stats = StepStats {
                    probes: hv as u64,
                    dstar: Some(self.timeline.levels[i].d()),
                    errset: self.states[i].q.len(),
                    ..Default::default()
                };
                ans
            }
            None => {
                self.stats = StepStats { probes: self.s.count_ones(..) as u64, ..Default::default() };
                self.g.connected_in(&self.s, u, v)
            }
        };
        Ok(ans)
    }

    fn step_query(&mut self, u: u32, v: u32, promise: bool) -> Result<bool> {
        self.advance();
        if promise {
            self.promise_query(u, v)
        } else {
            self.query(u, v)
        }
    }

    /// Advances time by a query request and answers it at the promise level.
    pub fn process_promise(&mut self, r: &Request) -> Result<Option<bool>> {
        match decode(r)? {
            Op::Set(v, on) => self.update(v, on).map(|_| None),
            Op::Query(u, v) => self.step_query(u, v, true).map(Some),
        }
    }
}

impl Replay for SubConn {
    type Error = SubConnError;

    fn process(&mut self, r: &Request) -> Result<Option<Answer>> {
        match decode(r)? {
            Op::Set(v, on) => self.update(v, on).map(|_| None),
            Op::Query(u, v) => self.step_query(u, v, false).map(|b| Some(Answer::Bool(b))),
        }
    }

    fn stats(&self) -> StepStats {
        self.stats
    }
}

/// Recomputes the answer by search on `G[S]`.
#[derive(Debug, Clone)]
pub struct SubConnOracle {
    g: Graph,
    s: FixedBitSet,
}

impl SubConnOracle {
    pub fn new(g: Graph, s0: &BTreeSet<u32>) -> Self {
        let s = to_bits(g.n(), s0.iter().copied());
        SubConnOracle { g, s }
    }

    pub fn vertex_set(&self) -> BTreeSet<u32> {
        self.s.ones().map(|v| v as u32).collect()
    }
}

impl Replay for SubConnOracle {
    type Error = SubConnError;

    fn process(&mut self, r: &Request) -> Result<Option<Answer>> {
        match decode(r)? {
            Op::Set(v, on) => {
                self.g.check(v)?;
                match (self.s.contains(v as usize), on) {
                    (true, true) => Err(SubConnError::Present(v)),
                    (false, false) => Err(SubConnError::Absent(v)),
                    _ => {
                        self.s.set(v as usize, on);
                        Ok(None)
                    }
                }
            }
            Op::Query(u, v) => {
                for x in [u, v] {
                    self.g.check(x)?;
                    if !self.s.contains(x as usize) {
                        return Err(SubConnError::Absent(x));
                    }
                }
                Ok(Some(Answer::Bool(self.g.connected_in(&self.s, u, v))))
            }
        }
    }

    fn stats(&self) -> StepStats {
        StepStats::default()
    }
}
