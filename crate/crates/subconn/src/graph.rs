//! Fixed undirected graph and induced-subgraph search.

use fixedbitset::FixedBitSet;

use crate::error::{Result, SubConnError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x as usize >= n {
                    return Err(SubConnError::Vertex { vertex: x, n });
                }
            }
            if u != v {
                adj[u as usize].insert(v as usize);
                adj[v as usize].insert(u as usize);
            }
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].contains(v as usize)
    }

    pub fn neighbors(&self, u: u32) -> &FixedBitSet {
        &self.adj[u as usize]
    }

    pub fn check(&self, v: u32) -> Result<()> {
        if (v as usize) < self.n() {
            Ok(())
        } else {
            Err(SubConnError::Vertex { vertex: v, n: self.n() })
        }
    }

    /// Vertices reachable from `src` inside `allowed ∪ {src}`; second value counts visits.
    pub fn reach_within(&self, src: u32, allowed: &FixedBitSet) -> (FixedBitSet, usize) {
        let mut seen = FixedBitSet::with_capacity(self.n());
        seen.insert(src as usize);
        let mut stack = vec![src as usize];
        let mut visits = 0;
        while let Some(x) = stack.pop() {
            visits += 1;
            for y in self.adj[x].intersection(allowed) {
                if !seen.put(y) {
                    stack.push(y);
                }
            }
        }
        (seen, visits)
    }

    /// `R ∪ N(R)` for `R` the component of `a` in `G[allowed ∪ {a}]`.
    pub fn closure(&self, a: u32, allowed: &FixedBitSet) -> (FixedBitSet, usize) {
        let (reach, visits) = self.reach_within(a, allowed);
        let mut out = reach.clone();
        for x in reach.ones() {
            out.union_with(&self.adj[x]);
        }
        (out, visits)
    }

    /// Connectivity of `u` and `v` in `G[s]`.
    pub fn connected_in(&self, s: &FixedBitSet, u: u32, v: u32) -> bool {
        u == v || self.reach_within(u, s).0.contains(v as usize)
    }
}
