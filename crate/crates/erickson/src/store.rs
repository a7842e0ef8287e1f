//! Per-time heaps over the predicted matrix.

use std::collections::BTreeMap;

use crate::base::Line;
use crate::heap::MaxHeap;
use crate::ledger::Ledger;

/// Whether heaps for every time step are built up front.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HeapMode {
    #[default]
    Full,
    Lazy,
}

/// `H_R(i, t)` keyed by column and `H_C(j, t)` keyed by row, valued by `M̂_t`.
#[derive(Debug, Clone)]
pub struct HeapStore {
    mode: HeapMode,
    rows: Vec<Vec<MaxHeap>>,
    cols: Vec<Vec<MaxHeap>>,
    lazy: BTreeMap<Line, MaxHeap>,
    lazy_t: usize,
    /// Heaps built on demand.
    pub rebuilds: u64,
}

fn row_heap(m0: &crate::base::Matrix, rhat: &[i64], chat: &[i64], i: usize) -> MaxHeap {
    MaxHeap::from_values((0..m0.n()).map(|j| m0.get(i, j) + rhat[i] + chat[j]).collect())
}

fn col_heap(m0: &crate::base::Matrix, rhat: &[i64], chat: &[i64], j: usize) -> MaxHeap {
    MaxHeap::from_values((0..m0.n()).map(|i| m0.get(i, j) + rhat[i] + chat[j]).collect())
}

impl HeapStore {
    /// Replays the prediction from a fresh ledger.
    pub fn build(ledger: &Ledger, mode: HeapMode) -> Self {
        let mut store = HeapStore {
            mode,
            rows: Vec::new(),
            cols: Vec::new(),
            lazy: BTreeMap::new(),
            lazy_t: usize::MAX,
            rebuilds: 0,
        };
        if mode == HeapMode::Full {
            let m0 = &ledger.base.m0;
            let n = m0.n();
            let (mut rhat, mut chat) = (vec![0i64; n], vec![0i64; n]);
            for t in 0..=ledger.horizon() {
                if let Some(p) = ledger.predicted(t) {
                    match p {
                        Line::Row(i) => rhat[i as usize] += 1,
                        Line::Col(j) => chat[j as usize] += 1,
                    }
                }
                store.rows.push((0..n).map(|i| row_heap(m0, &rhat, &chat, i)).collect());
                store.cols.push((0..n).map(|j| col_heap(m0, &rhat, &chat, j)).collect());
            }
        }
        store
    }

    pub fn mode(&self) -> HeapMode {
        self.mode
    }

    /// Heap for `line` at the ledger's current time.
    pub fn heap(&mut self, line: Line, ledger: &Ledger) -> &mut MaxHeap {
        let t = ledger.t;
        if self.mode == HeapMode::Full && t <= ledger.horizon() {
            return match line {
                Line::Row(i) => &mut self.rows[t][i as usize],
                Line::Col(j) => &mut self.cols[t][j as usize],
            };
        }
        if self.lazy_t != t {
            self.lazy.clear();
            self.lazy_t = t;
        }
        let rebuilds = &mut self.rebuilds;
        self.lazy.entry(line).or_insert_with(|| {
            *rebuilds += 1;
            let m0 = &ledger.base.m0;
            match line {
                Line::Row(i) => row_heap(m0, &ledger.rhat, &ledger.chat, i as usize),
                Line::Col(j) => col_heap(m0, &ledger.rhat, &ledger.chat, j as usize),
            }
        })
    }
}
