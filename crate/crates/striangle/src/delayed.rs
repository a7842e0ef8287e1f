//! Algorithms driven by a delayed prediction of the flip sequence.

use std::collections::BTreeSet;

use core_predictions::{Answer, Replay, Request, StepStats, SymDiffTracker};

use crate::error::{Result, StriError};
use crate::graph::{count_striangles, flip_of, validate, FlipGraph};
use crate::timeline::{predicted_replay, SensitivityTimeline};

/// Actual and predicted graphs with the tracked symmetric difference.
#[derive(Debug, Clone)]
pub struct Tracked {
    pub s: u32,
    pub g: FlipGraph,
    pub ghat: FlipGraph,
    pub tracker: SymDiffTracker,
    rhohat: Vec<Request>,
    vd_count: Vec<u32>,
    vd: BTreeSet<u32>,
    t: usize,
}

impl Tracked {
    fn new(g0: FlipGraph, s: u32, rhohat: &[Request]) -> Result<Self> {
        validate(&g0, rhohat)?;
        let n = g0.n();
        Ok(Tracked {
            s,
            ghat: g0.clone(),
            g: g0,
            tracker: SymDiffTracker::new(),
            rhohat: rhohat.to_vec(),
            vd_count: vec![0; n],
            vd: BTreeSet::new(),
            t: 0,
        })
    }

    /// Number of processed requests.
    pub fn time(&self) -> usize {
        self.t
    }

    /// Endpoints of flips whose tracker count is nonzero.
    pub fn vd(&self) -> &BTreeSet<u32> {
        &self.vd
    }

    /// Applies the next actual request and the aligned predicted request.
    /// Returns the actual flip with its new presence bit.
    fn step(&mut self, r: &Request) -> Result<Option<(u32, u32, bool)>> {
        let flip = flip_of(r)?;
        if let Some((u, v)) = flip {
            self.g.check(u, v)?;
        }
        self.t += 1;
        let predicted = self.rhohat.get(self.t - 1).copied();
        for ch in self.tracker.step(r, predicted.as_ref()) {
            let Some((u, v)) = flip_of(&ch.request)? else { continue };
            let delta: i32 = match (ch.before != 0, ch.after != 0) {
                (false, true) => 1,
                (true, false) => -1,
                _ => 0,
            };
            for x in [u, v] {
                let c = &mut self.vd_count[x as usize];
                *c = (*c as i32 + delta) as u32;
                if *c == 0 {
                    self.vd.remove(&x);
                } else {
                    self.vd.insert(x);
                }
            }
        }
        if let Some(p) = predicted {
            if let Some((u, v)) = flip_of(&p)? {
                self.ghat.flip(u, v)?;
            }
        }
        match flip {
            Some((u, v)) => Ok(Some((u, v, self.g.flip(u, v)?))),
            None => Ok(None),
        }
    }
}

/// Constant-time queries; updates scan only the error vertices.
#[derive(Debug, Clone)]
pub struct QueryOptimized {
    st: Tracked,
    timeline: SensitivityTimeline,
    c: i64,
    stats: StepStats,
}

impl QueryOptimized {
    pub fn preprocess(g0: FlipGraph, s: u32, rhohat: &[Request]) -> Result<Self> {
        let (timeline, _) = predicted_replay(&g0, s, rhohat)?;
        let c = count_striangles(&g0, s);
        Ok(QueryOptimized { st: Tracked::new(g0, s, rhohat)?, timeline, c, stats: StepStats::default() })
    }

    pub fn timeline(&self) -> &SensitivityTimeline {
        &self.timeline
    }

    pub fn state(&self) -> &Tracked {
        &self.st
    }

    pub fn query(&self) -> i64 {
        self.c
    }

    /// Processes one flip; returns the new count.
    pub fn update(&mut self, a: u32, b: u32) -> Result<i64> {
        self.process(&Request::flip(a, b))?;
        Ok(self.c)
    }
}

impl Replay for QueryOptimized {
    type Error = StriError;

    fn process(&mut self, r: &Request) -> Result<Option<Answer>> {
        let flip = self.st.step(r)?;
        let st = &self.st;
        let s = st.s;
        let mut probes = 0;
        match flip {
            None => {
                self.stats = StepStats { errset: st.vd.len(), ..Default::default() };
                return Ok(Some(Answer::Int(self.c)));
            }
            Some((a, b, on)) if a == s || b == s => {
                let x = if a == s { b } else { a };
                let mut sensediff = 0i64;
                for &v in &st.vd {
                    probes += 1;
                    if v == s || v == x {
                        continue;
                    }
                    sensediff += (st.g.has(s, v) && st.g.has(v, x)) as i64;
                    sensediff -= (st.ghat.has(s, v) && st.ghat.has(v, x)) as i64;
                }
                let e = if on { 1 } else { -1 };
                self.c += e * (self.timeline.lookup(x, st.t) + sensediff);
            }
            Some((a, b, on)) => {
                if st.g.has(s, a) && st.g.has(s, b) {
                    self.c += if on { 1 } else { -1 };
                }
            }
        }
        self.stats = StepStats { probes, errset: st.vd.len(), ..Default::default() };
        Ok(None)
    }

    fn stats(&self) -> StepStats {
        self.stats
    }
}

/// Constant-time updates; queries scan pairs of error vertices.
#[derive(Debug, Clone)]
pub struct UpdateOptimized {
    st: Tracked,
    timeline: SensitivityTimeline,
    chat: Vec<i64>,
    stats: StepStats,
}

impl UpdateOptimized {
    pub fn preprocess(g0: FlipGraph, s: u32, rhohat: &[Request]) -> Result<Self> {
        let (timeline, chat) = predicted_replay(&g0, s, rhohat)?;
        Ok(UpdateOptimized { st: Tracked::new(g0, s, rhohat)?, timeline, chat, stats: StepStats::default() })
    }

    /// Predicted counts `ĉ_0..ĉ_T`.
    pub fn predicted_counts(&self) -> &[i64] {
        &self.chat
    }

    pub fn timeline(&self) -> &SensitivityTimeline {
        &self.timeline
    }

    pub fn state(&self) -> &Tracked {
        &self.st
    }

    /// Count at the current time; second value is the pair counter.
    pub fn query(&self) -> (i64, u64) {
        let st = &self.st;
        let (s, t) = (st.s, st.t);
        let chat = self.chat[t.min(self.chat.len() - 1)];
        let vs: Vec<u32> = st.vd.iter().copied().filter(|&v| v != s).collect();
        let mut twice = 0i64;
        let mut pairs = 0u64;
        for &vi in &vs {
            let mut sensediff = 0i64;
            for &vj in &vs {
                if vi == vj {
                    continue;
                }
                pairs += 1;
                let real = st.g.has(s, vi) && st.g.has(s, vj) && st.g.has(vi, vj);
                let pred = st.ghat.has(s, vi) && st.ghat.has(s, vj) && st.ghat.has(vi, vj);
                twice += real as i64 - pred as i64;
                if st.ghat.has(s, vj) && st.ghat.has(vj, vi) {
                    sensediff -= 1;
                }
            }
            let b = match (st.g.has(s, vi), st.ghat.has(s, vi)) {
                (true, false) => 1,
                (false, true) => -1,
                _ => 0,
            };
            twice += 2 * b * (self.timeline.lookup(vi, t) + sensediff);
        }
        (chat + twice / 2, pairs)
    }
}

impl Replay for UpdateOptimized {
    type Error = StriError;

    fn process(&mut self, r: &Request) -> Result<Option<Answer>> {
        let flip = self.st.step(r)?;
        let errset = self.st.vd.len();
        if flip.is_some() {
            self.stats = StepStats { probes: 1, errset, ..Default::default() };
            return Ok(None);
        }
        let (c, pairs) = self.query();
        self.stats = StepStats { probes: pairs, errset, ..Default::default() };
        Ok(Some(Answer::Int(c)))
    }

    fn stats(&self) -> StepStats {
        self.stats
    }
}
