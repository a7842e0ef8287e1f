//! Polylogarithmic updates; queries correct the non-permanent rows and columns.

use std::collections::BTreeSet;

use core_predictions::{levels, Answer, Replay, Request, StepStats, Touch, WindowLevel};

use crate::base::{decode, erickson_oracle, Line, Matrix};
use crate::error::{EricksonError, Result};
use crate::ledger::Ledger;
use crate::store::{HeapMode, HeapStore};

/// Signed window differences for one line family at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    /// `r(ρ, t, i) − r(ρ̂, t − d, i)`.
    pub minus: Vec<i64>,
    /// `r(ρ̂, t + d, i) − r(ρ, t, i)`.
    pub plus: Vec<i64>,
    /// Indices with a negative entry in either array.
    pub bad: BTreeSet<u32>,
}

impl Bounds {
    fn new(plus: Vec<i64>) -> Self {
        let bad = (0..plus.len() as u32).filter(|&i| plus[i as usize] < 0).collect();
        Bounds { minus: vec![0; plus.len()], plus, bad }
    }

    fn add(&mut self, x: u32, dm: i64, dp: i64) {
        let i = x as usize;
        self.minus[i] += dm;
        self.plus[i] += dp;
        if self.minus[i] < 0 || self.plus[i] < 0 {
            self.bad.insert(x);
        } else {
            self.bad.remove(&x);
        }
    }
}

/// Per-level state: window events, bounds and partial maxima.
#[derive(Debug, Clone)]
pub struct UoptLevel {
    pub d: usize,
    window: WindowLevel<Line>,
    /// `p̂_{t,d}` for `t = 0..=T`; `None` when no entry is permanent.
    pub phat: Vec<Option<i64>>,
    pub nonperm_rows: BTreeSet<u32>,
    pub nonperm_cols: BTreeSet<u32>,
    pub rows: Bounds,
    pub cols: Bounds,
}

impl UoptLevel {
    /// All rows and columns in `B_{R,d}` and `B_{C,d}`.
    pub fn qualifies(&self) -> bool {
        self.rows.bad.is_empty() && self.cols.bad.is_empty()
    }
}

fn touches(ledger: &Ledger) -> Vec<Touch<Line>> {
    ledger
        .rhohat
        .iter()
        .map(|l| Touch { set: l.iter().map(|&x| (x, true)).collect(), read: Vec::new() })
        .collect()
}

fn prefix_counts(ledger: &Ledger, t: usize) -> (Vec<i64>, Vec<i64>) {
    let n = ledger.n();
    let (mut r, mut c) = (vec![0; n], vec![0; n]);
    for l in ledger.rhohat[..t.min(ledger.horizon())].iter().flatten() {
        match *l {
            Line::Row(i) => r[i as usize] += 1,
            Line::Col(j) => c[j as usize] += 1,
        }
    }
    (r, c)
}

/// Rows and columns not in `set`.
fn lines_outside(set: impl IntoIterator<Item = Line>, n: usize) -> (BTreeSet<u32>, BTreeSet<u32>) {
    let mut rows: BTreeSet<u32> = (0..n as u32).collect();
    let mut cols = rows.clone();
    for l in set {
        match l {
            Line::Row(i) => rows.remove(&i),
            Line::Col(j) => cols.remove(&j),
        };
    }
    (rows, cols)
}

impl UoptLevel {
    fn build(ledger: &Ledger, steps: &[Touch<Line>], d: usize) -> Self {
        let n = ledger.n();
        let all: BTreeSet<Line> =
            (0..n as u32).flat_map(|x| [Line::Row(x), Line::Col(x)]).collect();
        let window = WindowLevel::build(&all, steps, d);
        let m0 = &ledger.base.m0;
        let (mut rhat, mut chat) = (vec![0i64; n], vec![0i64; n]);
        let mut cursor = window.cursor();
        let mut phat = Vec::with_capacity(window.horizon + 1);
        loop {
            let t = cursor.time();
            if let Some(p) = ledger.predicted(t) {
                match p {
                    Line::Row(i) => rhat[i as usize] += 1,
                    Line::Col(j) => chat[j as usize] += 1,
                }
            }
            let (mut pr, mut pc) = (Vec::new(), Vec::new());
            for l in &cursor.permanent {
                match *l {
                    Line::Row(i) => pr.push(i),
                    Line::Col(j) => pc.push(j),
                }
            }
            let best = pr
                .iter()
                .flat_map(|&i| pc.iter().map(move |&j| (i as usize, j as usize)))
                .map(|(i, j)| m0.get(i, j) + rhat[i] + chat[j])
                .max();
            phat.push(best);
            if !cursor.advance() {
                break;
            }
        }
        let (nonperm_rows, nonperm_cols) = lines_outside(window.initial_permanent.iter().copied(), n);
        let (r_plus, c_plus) = prefix_counts(ledger, d);
        UoptLevel {
            d,
            window,
            phat,
            nonperm_rows,
            nonperm_cols,
            rows: Bounds::new(r_plus),
            cols: Bounds::new(c_plus),
        }
    }

    fn apply_events(&mut self, t: usize) {
        let Some(events) = self.window.permanent_events.get(t) else { return };
        for &(line, perm) in events {
            let (set, x) = match line {
                Line::Row(i) => (&mut self.nonperm_rows, i),
                Line::Col(j) => (&mut self.nonperm_cols, j),
            };
            if perm {
                set.remove(&x);
            } else {
                set.insert(x);
            }
        }
    }

    fn bounds(&mut self, line: Line) -> (&mut Bounds, u32) {
        match line {
            Line::Row(i) => (&mut self.rows, i),
            Line::Col(j) => (&mut self.cols, j),
        }
    }
}

/// Update-optimized maximum tracker over a doubling ladder of delays.
#[derive(Debug, Clone)]
pub struct UpdateOptimized {
    ledger: Ledger,
    heaps: HeapStore,
    levels: Vec<UoptLevel>,
    stats: StepStats,
}

impl UpdateOptimized {
    /// Ladder `levels(max(n, T))`.
    pub fn preprocess(m0: Matrix, rhohat: &[Request], mode: HeapMode) -> Result<Self> {
        let horizon = rhohat.len();
        let ladder = levels(m0.n().max(horizon));
        Self::with_ladder(m0, rhohat, mode, &ladder)
    }

    pub fn with_ladder(m0: Matrix, rhohat: &[Request], mode: HeapMode, ladder: &[usize]) -> Result<Self> {
        let ledger = Ledger::new(m0, rhohat)?;
        let heaps = HeapStore::build(&ledger, mode);
        let steps = touches(&ledger);
        let levels = ladder.iter().map(|&d| UoptLevel::build(&ledger, &steps, d)).collect();
        Ok(UpdateOptimized { ledger, heaps, levels, stats: StepStats::default() })
    }

    pub fn ledger(&self) -> &Ledger {
        &self.ledger
    }

    pub fn levels(&self) -> &[UoptLevel] {
        &self.levels
    }

    /// Index of the first qualifying level; `None` past the predicted horizon.
    pub fn dstar_index(&self) -> Option<usize> {
        if self.ledger.t > self.ledger.horizon() {
            return None;
        }
        self.levels.iter().position(UoptLevel::qualifies)
    }

    pub fn dstar(&self) -> Option<usize> {
        self.dstar_index().map(|i| self.levels[i].d)
    }

    fn advance(&mut self, line: Option<Line>) -> Result<u64> {
        self.ledger.step(line)?;
        let t = self.ledger.t;
        let horizon = self.ledger.horizon();
        let mut work = 0u64;
        for lv in &mut self.levels {
            let d = lv.d;
            if let Some(l) = line {
                let (b, x) = lv.bounds(l);
                b.add(x, 1, -1);
                work += 1;
            }
            if t > d && t - d <= horizon {
                if let Some(p) = self.ledger.predicted(t - d) {
                    let (b, x) = lv.bounds(p);
                    b.add(x, -1, 0);
                    work += 1;
                }
            }
            if t + d <= horizon {
                if let Some(p) = self.ledger.predicted(t + d) {
                    let (b, x) = lv.bounds(p);
                    b.add(x, 0, 1);
                    work += 1;
                }
            }
            lv.apply_events(t);
        }
        Ok(work)
    }

    /// Applies one increment.
    pub fn update(&mut self, line: Line) -> Result<()> {
        let work = self.advance(Some(line))?;
        self.stats = StepStats {
            probes: work,
            heap_ops: 0,
            dstar: self.dstar(),
            errset: self.ledger.error_size(),
        };
        Ok(())
    }

    /// Current maximum; the time step is consumed by the caller's request.
    fn answer(&mut self) -> i64 {
        let led = &self.ledger;
        let n = led.n();
        let Some(idx) = self.dstar_index() else {
            let (best, _) = erickson_oracle(&led.base);
            self.stats =
                StepStats { probes: (n * n) as u64, heap_ops: 0, dstar: None, errset: led.error_size() };
            return best;
        };
        let lv = &self.levels[idx];
        let t = led.t;
        debug_assert!(led.er.is_subset(&lv.nonperm_rows) && led.ec.is_subset(&lv.nonperm_cols));
        let mut best = lv.phat[t];
        let mut heap_ops = 0u64;
        for &i in &lv.nonperm_rows {
            let h = self.heaps.heap(Line::Row(i), led);
            for &j in &lv.nonperm_cols {
                h.update_key(j, led.predicted_entry(i as usize, j as usize) + led.cdiff[j as usize]);
            }
            heap_ops += lv.nonperm_cols.len() as u64 + 1;
            let (_, top) = h.max().expect("non-empty heap");
            best = best.max(Some(top + led.rdiff[i as usize]));
        }
        for &j in &lv.nonperm_cols {
            let h = self.heaps.heap(Line::Col(j), led);
            for &i in &lv.nonperm_rows {
                h.update_key(i, led.predicted_entry(i as usize, j as usize) + led.rdiff[i as usize]);
            }
            heap_ops += lv.nonperm_rows.len() as u64 + 1;
            let (_, top) = h.max().expect("non-empty heap");
            best = best.max(Some(top + led.cdiff[j as usize]));
        }
        let pairs = (lv.nonperm_rows.len() * lv.nonperm_cols.len()) as u64;
        self.stats = StepStats { probes: pairs, heap_ops, dstar: Some(lv.d), errset: led.error_size() };
        best.expect("some line is permanent or non-permanent")
    }

    /// Consumes a query step and returns the maximum.
    pub fn query(&mut self) -> Result<i64> {
        self.advance(None)?;
        Ok(self.answer())
    }
}

impl Replay for UpdateOptimized {
    type Error = EricksonError;

    fn process(&mut self, r: &Request) -> Result<Option<Answer>> {
        match decode(r)? {
            Some(line) => self.update(line).map(|_| None),
            None => self.query().map(|c| Some(Answer::Int(c))),
        }
    }

    fn stats(&self) -> StepStats {
        self.stats
    }
}
