//! Initial problem instances, random valid sequences and oracle replay.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use core_predictions::{Answer, Payload, Replay, Request};
use rand::seq::IteratorRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{AdvError, Result};

/// Supported dynamic problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Problem {
    Striangle,
    Subconn,
    Tc,
    Apsp,
    Erickson,
}

impl Problem {
    pub const ALL: [Problem; 5] =
        [Problem::Striangle, Problem::Subconn, Problem::Tc, Problem::Apsp, Problem::Erickson];

    pub fn name(self) -> &'static str {
        match self {
            Problem::Striangle => "striangle",
            Problem::Subconn => "subconn",
            Problem::Tc => "tc",
            Problem::Apsp => "apsp",
            Problem::Erickson => "erickson",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = AdvError;

    fn from_str(s: &str) -> Result<Self> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| AdvError::Argument(format!("unknown problem {s:?}")))
    }
}

/// Initial data structure of a workload.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "problem", rename_all = "snake_case")]
pub enum Instance {
    Striangle { n: usize, s: u32, edges: Vec<(u32, u32)> },
    Subconn { n: usize, edges: Vec<(u32, u32)>, members: Vec<u32> },
    Tc { n: usize, edges: Vec<(u32, u32)> },
    Apsp { n: usize, edges: Vec<(u32, u32, u64)> },
    Erickson { matrix: Vec<Vec<i64>> },
}

/// Largest random edge weight for APSP instances.
pub const MAX_WEIGHT: u64 = 10;

fn pair<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (u32, u32) {
    let u = rng.gen_range(0..n as u32);
    let mut v = rng.gen_range(0..n as u32 - 1);
    if v >= u {
        v += 1;
    }
    (u, v)
}

fn touched(r: &Request) -> Vec<u32> {
    match r.payload {
        Payload::VAdd(v) | Payload::VDel(v) => vec![v],
        Payload::QueryPair(u, v) => vec![u, v],
        _ => Vec::new(),
    }
}

impl Instance {
    pub fn problem(&self) -> Problem {
        match self {
            Instance::Striangle { .. } => Problem::Striangle,
            Instance::Subconn { .. } => Problem::Subconn,
            Instance::Tc { .. } => Problem::Tc,
            Instance::Apsp { .. } => Problem::Apsp,
            Instance::Erickson { .. } => Problem::Erickson,
        }
    }

    /// Vertex count, or the matrix dimension.
    pub fn size(&self) -> usize {
        match self {
            Instance::Striangle { n, .. }
            | Instance::Subconn { n, .. }
            | Instance::Tc { n, .. }
            | Instance::Apsp { n, .. } => *n,
            Instance::Erickson { matrix } => matrix.len(),
        }
    }

    /// Random instance; graphs need `n ≥ 2`.
    pub fn random<R: Rng + ?Sized>(problem: Problem, n: usize, rng: &mut R) -> Result<Self> {
        let min = if problem == Problem::Erickson { 1 } else { 2 };
        if n < min {
            return Err(AdvError::Argument(format!("{problem} needs n >= {min}")));
        }
        let undirected = |rng: &mut R, p: f64| {
            let mut edges = Vec::new();
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            edges
        };
        let directed = |rng: &mut R, p: f64| {
            let mut edges = Vec::new();
            for u in 0..n as u32 {
                for v in 0..n as u32 {
                    if u != v && rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            edges
        };
        Ok(match problem {
            Problem::Striangle => Instance::Striangle { n, s: 0, edges: undirected(rng, 0.3) },
            Problem::Subconn => {
                let edges = undirected(rng, 0.2);
                let members = (0..n as u32).filter(|_| rng.gen_bool(0.5)).collect();
                Instance::Subconn { n, edges, members }
            }
            Problem::Tc => Instance::Tc { n, edges: directed(rng, 0.1) },
            Problem::Apsp => {
                let edges = directed(rng, 0.15)
                    .into_iter()
                    .map(|(u, v)| (u, v, rng.gen_range(1..=MAX_WEIGHT)))
                    .collect();
                Instance::Apsp { n, edges }
            }
            Problem::Erickson => Instance::Erickson {
                matrix: (0..n).map(|_| (0..n).map(|_| rng.gen_range(-20..=20)).collect()).collect(),
            },
        })
    }

    /// One random request valid after `prefix`; a query with probability `q`.
    pub fn random_request<R: Rng + ?Sized>(&self, rng: &mut R, prefix: &[Request], q: f64) -> Request {
        let n = self.size();
        let query = rng.gen_bool(q);
        match self {
            Instance::Striangle { .. } => {
                if query {
                    Request::query()
                } else {
                    let (u, v) = pair(rng, n);
                    Request::flip(u, v)
                }
            }
            Instance::Subconn { .. } => {
                let s = self.members_after(prefix);
                if query && !s.is_empty() {
                    let u = *s.iter().choose(rng).expect("non-empty");
                    let v = *s.iter().choose(rng).expect("non-empty");
                    Request::query_pair(u, v)
                } else {
                    let v = rng.gen_range(0..n as u32);
                    if s.contains(&v) {
                        Request::vdel(v)
                    } else {
                        Request::vadd(v)
                    }
                }
            }
            Instance::Tc { .. } | Instance::Apsp { .. } => {
                let (u, v) = pair(rng, n);
                if query {
                    Request::query_pair(u, v)
                } else if let Instance::Tc { .. } = self {
                    Request::dedge(u, v)
                } else {
                    Request::wedge(u, v, rng.gen_range(1..=MAX_WEIGHT))
                }
            }
            Instance::Erickson { .. } => {
                let x = rng.gen_range(0..n as u32);
                if query {
                    Request::query()
                } else if rng.gen_bool(0.5) {
                    Request::row(x)
                } else {
                    Request::col(x)
                }
            }
        }
    }

    /// Random valid sequence of length `len`.
    pub fn random_sequence<R: Rng + ?Sized>(&self, rng: &mut R, len: usize, q: f64) -> Vec<Request> {
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            let r = self.random_request(rng, &out, q);
            out.push(r);
        }
        out
    }

    fn members_after(&self, prefix: &[Request]) -> BTreeSet<u32> {
        let Instance::Subconn { members, .. } = self else { return BTreeSet::new() };
        let mut s: BTreeSet<u32> = members.iter().copied().collect();
        for r in prefix {
            match r.payload {
                Payload::VAdd(v) => {
                    s.insert(v);
                }
                Payload::VDel(v) => {
                    s.remove(&v);
                }
                _ => {}
            }
        }
        s
    }

    /// Whether adjacent `a, b` may trade places without invalidating the sequence.
    pub fn swappable(&self, a: &Request, b: &Request) -> bool {
        match self {
            Instance::Subconn { .. } => {
                !((a.is_update() || b.is_update()) && touched(a).iter().any(|x| touched(b).contains(x)))
            }
            _ => true,
        }
    }

    /// Whether `r` may be replaced by an outlier without invalidating the rest.
    pub fn replaceable(&self, r: &Request) -> bool {
        match self {
            Instance::Subconn { .. } => r.is_query(),
            _ => true,
        }
    }

    /// Replacement for a replaceable request following `prefix`.
    pub fn outlier<R: Rng + ?Sized>(&self, rng: &mut R, prefix: &[Request], original: &Request) -> Request {
        match self {
            Instance::Subconn { .. } if original.is_query() => self.random_request(rng, prefix, 1.0),
            _ => self.random_request(rng, prefix, 0.3),
        }
    }

    /// Per-request oracle outputs.
    pub fn oracle_replay(&self, rho: &[Request]) -> Result<Vec<Option<Answer>>> {
        fn run<A: Replay>(mut a: A, rho: &[Request]) -> Result<Vec<Option<Answer>>>
        where
            A::Error: fmt::Display,
        {
            rho.iter()
                .enumerate()
                .map(|(i, r)| a.process(r).map_err(|e| AdvError::Replay { t: i + 1, msg: e.to_string() }))
                .collect()
        }
        let bad = |e: &dyn fmt::Display| AdvError::Argument(e.to_string());
        match self {
            Instance::Striangle { n, s, edges } => {
                let g = striangle::FlipGraph::from_edges(*n, edges).map_err(|e| bad(&e))?;
                run(striangle::UpdateOptBaseline::new(g, *s), rho)
            }
            Instance::Subconn { n, edges, members } => {
                let g = subconn::Graph::from_edges(*n, edges).map_err(|e| bad(&e))?;
                run(subconn::SubConnOracle::new(g, &members.iter().copied().collect()), rho)
            }
            Instance::Tc { n, edges } => {
                let g = reach_tc::digraph(*n, edges).map_err(|e| bad(&e))?;
                run(reach_tc::TcOracle::new(g), rho)
            }
            Instance::Apsp { n, edges } => {
                let g = reach_tc::DiGraph::from_edges(*n, edges).map_err(|e| bad(&e))?;
                run(apsp::ApspOracle::new(g), rho)
            }
            Instance::Erickson { matrix } => {
                let m = erickson::Matrix::from_rows(matrix).map_err(|e| bad(&e))?;
                run(erickson::EricksonOracle::new(m), rho)
            }
        }
    }

    /// Oracle answers to the queries of `rho`, in order.
    pub fn oracle_answers(&self, rho: &[Request]) -> Result<Vec<Answer>> {
        Ok(self.oracle_replay(rho)?.into_iter().flatten().collect())
    }
}
