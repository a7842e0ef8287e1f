#![allow(dead_code)]

use core_predictions::Request;
use rand::seq::SliceRandom;
use rand::Rng;
use striangle::FlipGraph;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> FlipGraph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    FlipGraph::from_edges(n, &edges).unwrap()
}

pub fn random_request<R: Rng>(rng: &mut R, n: usize, q: f64) -> Request {
    if rng.gen_bool(q) {
        return Request::query();
    }
    let u = rng.gen_range(0..n as u32);
    let mut v = rng.gen_range(0..n as u32 - 1);
    if v >= u {
        v += 1;
    }
    Request::flip(u, v)
}

pub fn random_workload<R: Rng>(rng: &mut R, n: usize, len: usize, q: f64) -> Vec<Request> {
    (0..len).map(|_| random_request(rng, n, q)).collect()
}

/// Prediction with displacement at most `d` and `k` replaced positions.
pub fn predict<R: Rng>(rng: &mut R, rho: &[Request], d: usize, k: usize, n: usize) -> Vec<Request> {
    let mut keyed: Vec<(usize, usize)> = (0..rho.len()).map(|i| (i + rng.gen_range(0..=d), i)).collect();
    keyed.sort();
    let mut out: Vec<Request> = keyed.into_iter().map(|(_, i)| rho[i]).collect();
    let mut pos: Vec<usize> = (0..out.len()).collect();
    pos.shuffle(rng);
    for &p in pos.iter().take(k) {
        out[p] = random_request(rng, n, 0.3);
    }
    out
}
