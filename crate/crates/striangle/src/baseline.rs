//! Prediction-free algorithms and the brute-force oracle.

use core_predictions::{Answer, Replay, Request, StepStats};

use crate::error::{Result, StriError};
use crate::graph::{count_striangles, flip_of, FlipGraph};

/// Linear-time updates, constant-time queries.
#[derive(Debug, Clone)]
pub struct QueryOptBaseline {
    g: FlipGraph,
    s: u32,
    c: i64,
    sens: Vec<i64>,
    stats: StepStats,
}

impl QueryOptBaseline {
    pub fn new(g0: FlipGraph, s: u32) -> Self {
        let sens = (0..g0.n() as u32).map(|v| if v == s { 0 } else { g0.sensitivity(s, v) }).collect();
        let c = count_striangles(&g0, s);
        QueryOptBaseline { g: g0, s, c, sens, stats: StepStats::default() }
    }

    pub fn count(&self) -> i64 {
        self.c
    }

    pub fn graph(&self) -> &FlipGraph {
        &self.g
    }

    pub fn sensitivity(&self, v: u32) -> i64 {
        self.sens[v as usize]
    }

    /// Applies the flip of `(a, b)`.
    pub fn update(&mut self, a: u32, b: u32) -> Result<()> {
        let s = self.s;
        let on = self.g.flip(a, b)?;
        let e = if on { 1 } else { -1 };
        let mut probes = 1;
        if a == s || b == s {
            let u = if a == s { b } else { a };
            self.c += e * self.sens[u as usize];
            for v in self.g.neighbors(u).filter(|&v| v != s).collect::<Vec<_>>() {
                self.sens[v as usize] += e;
            }
            probes += self.g.n() as u64;
        } else {
            let (sa, sb) = (self.g.has(s, a), self.g.has(s, b));
            if sa && sb {
                self.c += e;
            }
            if sb {
                self.sens[a as usize] += e;
            }
            if sa {
                self.sens[b as usize] += e;
            }
        }
        self.stats = StepStats { probes, ..Default::default() };
        Ok(())
    }
}

impl Replay for QueryOptBaseline {
    type Error = StriError;

    fn process(&mut self, r: &Request) -> Result<Option<Answer>> {
        match flip_of(r)? {
            Some((a, b)) => self.update(a, b).map(|_| None),
            None => {
                self.stats = StepStats::default();
                Ok(Some(Answer::Int(self.c)))
            }
        }
    }

    fn stats(&self) -> StepStats {
        self.stats
    }
}

/// Constant-time updates, quadratic queries. Also serves as the oracle.
#[derive(Debug, Clone)]
pub struct UpdateOptBaseline {
    g: FlipGraph,
    s: u32,
    stats: StepStats,
}

impl UpdateOptBaseline {
    pub fn new(g0: FlipGraph, s: u32) -> Self {
        UpdateOptBaseline { g: g0, s, stats: StepStats::default() }
    }

    pub fn graph(&self) -> &FlipGraph {
        &self.g
    }

    pub fn query(&self) -> i64 {
        count_striangles(&self.g, self.s)
    }
}

impl Replay for UpdateOptBaseline {
    type Error = StriError;

    fn process(&mut self, r: &Request) -> Result<Option<Answer>> {
        match flip_of(r)? {
            Some((a, b)) => {
                self.g.flip(a, b)?;
                self.stats = StepStats { probes: 1, ..Default::default() };
                Ok(None)
            }
            None => {
                let d = self.g.degree(self.s) as u64;
                self.stats = StepStats { probes: d * d.saturating_sub(1) / 2, ..Default::default() };
                Ok(Some(Answer::Int(self.query())))
            }
        }
    }

    fn stats(&self) -> StepStats {
        self.stats
    }
}
