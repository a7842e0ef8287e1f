//! Undirected graph under edge flips.

use core_predictions::{Payload, Request};
use fixedbitset::FixedBitSet;

use crate::error::{Result, StriError};

/// Simple undirected graph stored as adjacency bitsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipGraph {
    adj: Vec<FixedBitSet>,
}

impl FlipGraph {
    pub fn new(n: usize) -> Self {
        FlipGraph { adj: vec![FixedBitSet::with_capacity(n); n] }
    }

    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.check(u, v)?;
            g.set(u, v, true);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].contains(v as usize)
    }

    pub fn neighbors(&self, u: u32) -> impl Iterator<Item = u32> + '_ {
        self.adj[u as usize].ones().map(|v| v as u32)
    }

    pub fn degree(&self, u: u32) -> usize {
        self.adj[u as usize].count_ones(..)
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        (0..self.n() as u32)
            .flat_map(|u| self.neighbors(u).filter(move |&v| u < v).map(move |v| (u, v)))
            .collect()
    }

    /// Validates an edge `(u, v)`.
    pub fn check(&self, u: u32, v: u32) -> Result<()> {
        for x in [u, v] {
            if x as usize >= self.n() {
                return Err(StriError::Vertex { vertex: x, n: self.n() });
            }
        }
        if u == v {
            return Err(StriError::SelfLoop(u));
        }
        Ok(())
    }

    fn set(&mut self, u: u32, v: u32, on: bool) {
        self.adj[u as usize].set(v as usize, on);
        self.adj[v as usize].set(u as usize, on);
    }

    /// Toggles `(u, v)`; returns whether the edge is present afterwards.
    pub fn flip(&mut self, u: u32, v: u32) -> Result<bool> {
        self.check(u, v)?;
        let on = !self.has(u, v);
        self.set(u, v, on);
        Ok(on)
    }

    /// `|N(s) ∩ N(u)|`: triangles gained by adding `(s, u)`.
    pub fn sensitivity(&self, s: u32, u: u32) -> i64 {
        self.adj[s as usize].intersection_count(&self.adj[u as usize]) as i64
    }
}

/// Number of pairs `{a, b}` with `(s,a), (s,b), (a,b)` all present.
pub fn count_striangles(g: &FlipGraph, s: u32) -> i64 {
    let ns: Vec<u32> = g.neighbors(s).collect();
    let mut c = 0;
    for (i, &a) in ns.iter().enumerate() {
        for &b in &ns[i + 1..] {
            c += g.has(a, b) as i64;
        }
    }
    c
}

/// Edge endpoints of a flip request, or `None` for a query.
pub fn flip_of(r: &Request) -> Result<Option<(u32, u32)>> {
    match r.payload {
        Payload::Edge(u, v) if r.is_update() => Ok(Some((u, v))),
        Payload::Query if r.is_query() => Ok(None),
        _ => Err(StriError::Request(r.to_string())),
    }
}

/// Validates every request of a workload against `g`.
pub fn validate(g: &FlipGraph, requests: &[Request]) -> Result<()> {
    for r in requests {
        if let Some((u, v)) = flip_of(r)? {
            g.check(u, v)?;
        }
    }
    Ok(())
}
