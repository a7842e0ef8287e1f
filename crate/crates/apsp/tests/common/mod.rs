#![allow(dead_code)]

use core_predictions::Request;
use rand::Rng;
use reach_tc::{DiGraph, Dist};

pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, p: f64) -> DiGraph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in 0..n as u32 {
            if u != v && rng.gen_bool(p) {
                edges.push((u, v, rng.gen_range(1..=10)));
            }
        }
    }
    DiGraph::from_edges(n, &edges).unwrap()
}

/// Flips reuse a small weight palette so edges are toggled off again.
pub fn random_workload<R: Rng>(rng: &mut R, n: usize, len: usize, q: f64) -> Vec<Request> {
    (0..len)
        .map(|_| {
            let u = rng.gen_range(0..n as u32);
            let v = rng.gen_range(0..n as u32);
            if rng.gen_bool(q) || u == v {
                Request::query_pair(u, v)
            } else {
                Request::wedge(u, v, [1, 3, 10][rng.gen_range(0..3)])
            }
        })
        .collect()
}

pub fn delayed<R: Rng>(rng: &mut R, rho: &[Request], d: usize) -> Vec<Request> {
    let mut keyed: Vec<(usize, usize)> = (0..rho.len()).map(|i| (i + rng.gen_range(0..=d), i)).collect();
    keyed.sort();
    keyed.into_iter().map(|(_, i)| rho[i]).collect()
}

/// Bellman-Ford over an edge list.
pub fn bellman_ford(n: usize, edges: &[(u32, u32, u64)], src: u32) -> Vec<Dist> {
    let mut dist: Vec<Dist> = vec![None; n];
    dist[src as usize] = Some(0);
    for _ in 0..n {
        for &(u, v, w) in edges {
            if let Some(du) = dist[u as usize] {
                if dist[v as usize].is_none_or(|dv| du + w < dv) {
                    dist[v as usize] = Some(du + w);
                }
            }
        }
    }
    dist
}
