//! Per-level permanent/active sets and connectivity tables over predicted time.

use std::collections::{BTreeMap, BTreeSet};

use core_predictions::{levels, Payload, Request, Touch, WindowLevel};
use fixedbitset::FixedBitSet;

use crate::error::{Result, SubConnError};
use crate::graph::Graph;

/// Decoded request.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    /// Vertex insertion (`true`) or deletion (`false`).
    Set(u32, bool),
    Query(u32, u32),
}

pub fn decode(r: &Request) -> Result<Op> {
    match r.payload {
        Payload::VAdd(v) if r.is_update() => Ok(Op::Set(v, true)),
        Payload::VDel(v) if r.is_update() => Ok(Op::Set(v, false)),
        Payload::QueryPair(u, v) if r.is_query() => Ok(Op::Query(u, v)),
        _ => Err(SubConnError::Request(r.to_string())),
    }
}

pub(crate) fn touches(g: &Graph, rhohat: &[Request]) -> Result<Vec<Touch<u32>>> {
    rhohat
        .iter()
        .map(|r| match decode(r)? {
            Op::Set(v, on) => {
                g.check(v)?;
                Ok(Touch { set: vec![(v, on)], read: vec![] })
            }
            Op::Query(u, v) => {
                g.check(u)?;
                g.check(v)?;
                Ok(Touch { set: vec![], read: vec![u, v] })
            }
        })
        .collect()
}

pub(crate) fn to_bits(n: usize, it: impl IntoIterator<Item = u32>) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for v in it {
        b.insert(v as usize);
    }
    b
}

pub(crate) fn apply(bits: &mut FixedBitSet, events: &[(u32, bool)]) {
    for &(v, on) in events {
        bits.set(v as usize, on);
    }
}

/// One radius: window events plus `C(a, ·, t)` closures for each active `a`.
#[derive(Debug, Clone)]
pub struct LevelTables {
    pub window: WindowLevel<u32>,
    /// `tables[t][a]` holds every `b` connected to `a` in `G[P_t ∪ {a, b}]`.
    pub tables: Vec<BTreeMap<u32, FixedBitSet>>,
    /// DFS visits spent building the tables.
    pub work: u64,
}

impl LevelTables {
    pub fn d(&self) -> usize {
        self.window.d
    }

    /// `C(a, b, t)`; `None` when `a` is not active at `t`.
    pub fn connected(&self, a: u32, b: u32, t: usize) -> Option<bool> {
        let t = t.min(self.window.horizon);
        self.tables[t].get(&a).map(|c| a == b || c.contains(b as usize))
    }
}

/// Builds the tables of one radius.
pub fn promise_preprocess(g: &Graph, s0: &BTreeSet<u32>, rhohat: &[Request], d: usize) -> Result<LevelTables> {
    for &v in s0 {
        g.check(v)?;
    }
    let steps = touches(g, rhohat)?;
    let window = WindowLevel::build(s0, &steps, d);
    let n = g.n();
    let mut perm = to_bits(n, window.initial_permanent.iter().copied());
    let mut active = to_bits(n, window.initial_active.iter().copied());
    let mut tables = Vec::with_capacity(window.horizon + 1);
    let mut work = 0u64;
    for t in 0..=window.horizon {
        if t > 0 {
            apply(&mut perm, &window.permanent_events[t]);
            apply(&mut active, &window.active_events[t]);
        }
        let row = active
            .ones()
            .map(|a| {
                let (c, visits) = g.closure(a as u32, &perm);
                work += visits as u64;
                (a as u32, c)
            })
            .collect();
        tables.push(row);
    }
    Ok(LevelTables { window, tables, work })
}

/// Tables for every level of the doubling ladder.
#[derive(Debug, Clone)]
pub struct SubConnTimeline {
    pub levels: Vec<LevelTables>,
}

impl SubConnTimeline {
    pub fn work(&self) -> u64 {
        self.levels.iter().map(|l| l.work).sum()
    }
}

pub fn agnostic_preprocess(g: &Graph, s0: &BTreeSet<u32>, rhohat: &[Request]) -> Result<SubConnTimeline> {
    levels(g.n())
        .into_iter()
        .map(|d| promise_preprocess(g, s0, rhohat, d))
        .collect::<Result<_>>()
        .map(|levels| SubConnTimeline { levels })
}
