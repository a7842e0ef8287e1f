//! Constant-time queries; updates correct one heap at the error columns or rows.

use core_predictions::{Answer, Replay, Request, StepStats};

use crate::base::{decode, erickson_oracle, Line, Matrix};
use crate::error::{EricksonError, Result};
use crate::ledger::Ledger;
use crate::store::{HeapMode, HeapStore};

#[derive(Debug, Clone)]
pub struct QueryOptimized {
    ledger: Ledger,
    heaps: HeapStore,
    c: i64,
    argmax: (usize, usize),
    stats: StepStats,
}

impl QueryOptimized {
    pub fn preprocess(m0: Matrix, rhohat: &[Request], mode: HeapMode) -> Result<Self> {
        let ledger = Ledger::new(m0, rhohat)?;
        let heaps = HeapStore::build(&ledger, mode);
        let (c, argmax) = erickson_oracle(&ledger.base);
        Ok(QueryOptimized { ledger, heaps, c, argmax, stats: StepStats::default() })
    }

    pub fn ledger(&self) -> &Ledger {
        &self.ledger
    }

    pub fn heaps(&self) -> &HeapStore {
        &self.heaps
    }

    pub fn query(&self) -> i64 {
        self.c
    }

    /// Position of the tracked maximum.
    pub fn argmax(&self) -> (usize, usize) {
        self.argmax
    }

    /// Applies one increment; returns the new maximum.
    pub fn update(&mut self, line: Line) -> Result<i64> {
        self.ledger.step(Some(line))?;
        let led = &self.ledger;
        let (hit, errors) = match line {
            Line::Row(i) => (i as usize == self.argmax.0, &led.ec),
            Line::Col(j) => (j as usize == self.argmax.1, &led.er),
        };
        let mut corrections = 0u64;
        let mut heap_ops = 0u64;
        if hit {
            self.c += 1;
        } else {
            let h = self.heaps.heap(line, led);
            for &x in errors {
                let (value, key) = match line {
                    Line::Row(i) => (led.predicted_entry(i as usize, x as usize) + led.cdiff[x as usize], x),
                    Line::Col(j) => (led.predicted_entry(x as usize, j as usize) + led.rdiff[x as usize], x),
                };
                h.update_key(key, value);
                corrections += 1;
            }
            let (k0, c0) = h.max().expect("non-empty heap");
            heap_ops = corrections + 1;
            let (c1, pos) = match line {
                Line::Row(i) => (c0 + led.rdiff[i as usize], (i as usize, k0 as usize)),
                Line::Col(j) => (c0 + led.cdiff[j as usize], (k0 as usize, j as usize)),
            };
            if c1 > self.c {
                self.c = c1;
                self.argmax = pos;
            }
        }
        self.stats = StepStats { probes: corrections, heap_ops, dstar: None, errset: led.error_size() };
        Ok(self.c)
    }
}

impl Replay for QueryOptimized {
    type Error = EricksonError;

    fn process(&mut self, r: &Request) -> Result<Option<Answer>> {
        match decode(r)? {
            Some(line) => self.update(line).map(|_| None),
            None => {
                self.ledger.step(None)?;
                self.stats = StepStats { errset: self.ledger.error_size(), ..Default::default() };
                Ok(Some(Answer::Int(self.c)))
            }
        }
    }

    fn stats(&self) -> StepStats {
        self.stats
    }
}
