#![allow(dead_code)]

use core_predictions::Request;
use rand::Rng;
use reach_tc::{digraph, DiGraph};

pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, p: f64) -> DiGraph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in 0..n as u32 {
            if u != v && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    digraph(n, &edges).unwrap()
}

pub fn random_pair<R: Rng>(rng: &mut R, n: usize) -> (u32, u32) {
    let u = rng.gen_range(0..n as u32);
    let mut v = rng.gen_range(0..n as u32 - 1);
    if v >= u {
        v += 1;
    }
    (u, v)
}

pub fn random_workload<R: Rng>(rng: &mut R, n: usize, len: usize, q: f64) -> Vec<Request> {
    (0..len)
        .map(|_| {
            if rng.gen_bool(q) {
                Request::query_pair(rng.gen_range(0..n as u32), rng.gen_range(0..n as u32))
            } else {
                let (u, v) = random_pair(rng, n);
                Request::dedge(u, v)
            }
        })
        .collect()
}

/// Permutation with every displacement at most `d`.
pub fn delayed<R: Rng>(rng: &mut R, rho: &[Request], d: usize) -> Vec<Request> {
    let mut keyed: Vec<(usize, usize)> = (0..rho.len()).map(|i| (i + rng.gen_range(0..=d), i)).collect();
    keyed.sort();
    keyed.into_iter().map(|(_, i)| rho[i]).collect()
}
