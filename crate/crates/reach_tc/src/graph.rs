//! Directed weighted multigraph under edge flips and single-source searches.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{GraphError, Result};

/// Directed edge `(u, v, w)`.
pub type Edge = (u32, u32, u64);

/// Distance; `None` is unreachable.
pub type Dist = Option<u64>;

/// Set of present directed edges. Parallel edges of different weight may coexist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl DiGraph {
    pub fn new(n: usize) -> Self {
        DiGraph { n, edges: BTreeSet::new() }
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Self::new(n);
        for &e in edges {
            g.check(e)?;
            g.edges.insert(e);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn has(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn check_vertex(&self, v: u32) -> Result<()> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            Err(GraphError::Vertex { vertex: v, n: self.n })
        }
    }

    pub fn check(&self, (u, v, _): Edge) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    /// Toggles `e`; returns whether it is present afterwards.
    pub fn flip(&mut self, e: Edge) -> Result<bool> {
        self.check(e)?;
        if self.edges.remove(&e) {
            Ok(false)
        } else {
            self.edges.insert(e);
            Ok(true)
        }
    }

    /// Out-adjacency with the minimum weight per ordered pair.
    pub fn adjacency(&self) -> Vec<Vec<(u32, u64)>> {
        adjacency(self.n, self.edges.iter())
    }
}

pub fn adjacency<'a>(n: usize, edges: impl Iterator<Item = &'a Edge>) -> Vec<Vec<(u32, u64)>> {
    let mut adj: Vec<Vec<(u32, u64)>> = vec![Vec::new(); n];
    for &(u, v, w) in edges {
        let out = &mut adj[u as usize];
        match out.iter_mut().find(|(x, _)| *x == v) {
            Some(slot) => slot.1 = slot.1.min(w),
            None => out.push((v, w)),
        }
    }
    adj
}

/// Single-source distances; breadth-first when every weight is 1.
/// Second value counts settled vertices.
pub fn sssp(adj: &[Vec<(u32, u64)>], src: u32, unit: bool) -> (Vec<Dist>, usize) {
    let n = adj.len();
    let mut dist: Vec<Dist> = vec![None; n];
    dist[src as usize] = Some(0);
    let mut settled = 0;
    if unit {
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            settled += 1;
            let dx = dist[x as usize].expect("queued vertices are reached");
            for &(y, _) in &adj[x as usize] {
                if dist[y as usize].is_none() {
                    dist[y as usize] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        return (dist, settled);
    }
    let mut done = vec![false; n];
    loop {
        let next = (0..n).filter(|&x| !done[x]).filter_map(|x| dist[x].map(|d| (d, x))).min();
        let Some((dx, x)) = next else { break };
        done[x] = true;
        settled += 1;
        for &(y, w) in &adj[x] {
            let cand = dx.saturating_add(w);
            if dist[y as usize].is_none_or(|d| cand < d) {
                dist[y as usize] = Some(cand);
            }
        }
    }
    (dist, settled)
}
