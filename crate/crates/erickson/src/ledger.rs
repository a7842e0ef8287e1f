//! Actual and predicted increment counters with the error sets.

use std::collections::BTreeSet;

use core_predictions::Request;

use crate::base::{decode, EricksonBase, Line, Matrix};
use crate::error::Result;

/// Counters under `ρ` and `ρ̂` at the current time, and their differences.
#[derive(Debug, Clone)]
pub struct Ledger {
    pub base: EricksonBase,
    pub rhohat: Vec<Option<Line>>,
    /// `r(ρ̂, t, ·)` and `c(ρ̂, t, ·)`.
    pub rhat: Vec<i64>,
    pub chat: Vec<i64>,
    /// `r(ρ, t, ·) − r(ρ̂, t, ·)` and the column analogue.
    pub rdiff: Vec<i64>,
    pub cdiff: Vec<i64>,
    pub er: BTreeSet<u32>,
    pub ec: BTreeSet<u32>,
    pub t: usize,
}

impl Ledger {
    pub fn new(m0: Matrix, rhohat: &[Request]) -> Result<Self> {
        let lines: Vec<Option<Line>> = rhohat.iter().map(decode).collect::<Result<_>>()?;
        for l in lines.iter().flatten() {
            m0.check(*l)?;
        }
        let n = m0.n();
        Ok(Ledger {
            base: EricksonBase::new(m0),
            rhohat: lines,
            rhat: vec![0; n],
            chat: vec![0; n],
            rdiff: vec![0; n],
            cdiff: vec![0; n],
            er: BTreeSet::new(),
            ec: BTreeSet::new(),
            t: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.base.m0.n()
    }

    pub fn horizon(&self) -> usize {
        self.rhohat.len()
    }

    /// Predicted request at 1-based position `t`.
    pub fn predicted(&self, t: usize) -> Option<Line> {
        t.checked_sub(1).and_then(|i| self.rhohat.get(i)).copied().flatten()
    }

    /// `M̂_t[i][j]`.
    pub fn predicted_entry(&self, i: usize, j: usize) -> i64 {
        self.base.m0.get(i, j) + self.rhat[i] + self.chat[j]
    }

    pub fn error_size(&self) -> usize {
        self.er.len() + self.ec.len()
    }

    fn bump(&mut self, line: Line, delta: i64) {
        let (diff, set, x) = match line {
            Line::Row(i) => (&mut self.rdiff, &mut self.er, i),
            Line::Col(j) => (&mut self.cdiff, &mut self.ec, j),
        };
        diff[x as usize] += delta;
        if diff[x as usize] == 0 {
            set.remove(&x);
        } else {
            set.insert(x);
        }
    }

    /// Advances to `t + 1` with the actual increment `line`.
    pub fn step(&mut self, line: Option<Line>) -> Result<()> {
        if let Some(l) = line {
            self.base.increment(l)?;
        }
        self.t += 1;
        if let Some(l) = line {
            self.bump(l, 1);
        }
        if let Some(p) = self.predicted(self.t) {
            match p {
                Line::Row(i) => self.rhat[i as usize] += 1,
                Line::Col(j) => self.chat[j as usize] += 1,
            }
            self.bump(p, -1);
        }
        Ok(())
    }
}
