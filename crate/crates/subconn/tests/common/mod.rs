#![allow(dead_code)]

use std::collections::BTreeSet;

use core_predictions::{Payload, Request};
use rand::seq::IteratorRandom;
use rand::Rng;
use subconn::Graph;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Valid workload: updates toggle membership, queries name two members.
pub fn random_workload<R: Rng>(rng: &mut R, n: usize, s0: &BTreeSet<u32>, len: usize) -> Vec<Request> {
    let mut s = s0.clone();
    let mut out = Vec::with_capacity(len);
    while out.len() < len {
        if s.len() >= 1 && rng.gen_bool(0.4) {
            let u = *s.iter().choose(rng).unwrap();
            let v = *s.iter().choose(rng).unwrap();
            out.push(Request::query_pair(u, v));
        } else {
            let v = rng.gen_range(0..n as u32);
            if s.remove(&v) {
                out.push(Request::vdel(v));
            } else {
                s.insert(v);
                out.push(Request::vadd(v));
            }
        }
    }
    out
}

fn verts(r: &Request) -> Vec<u32> {
    match r.payload {
        Payload::VAdd(v) | Payload::VDel(v) => vec![v],
        Payload::QueryPair(u, v) => vec![u, v],
        _ => vec![],
    }
}

pub fn conflict(a: &Request, b: &Request) -> bool {
    (a.is_update() || b.is_update()) && verts(a).iter().any(|x| verts(b).contains(x))
}

/// Adjacent swaps of non-conflicting requests keeping every displacement `≤ d`.
pub fn delayed<R: Rng>(rng: &mut R, rho: &[Request], d: usize) -> Vec<Request> {
    let mut items: Vec<(usize, Request)> = rho.iter().copied().enumerate().collect();
    if items.len() < 2 || d == 0 {
        return rho.to_vec();
    }
    for _ in 0..items.len() * 4 {
        let i = rng.gen_range(0..items.len() - 1);
        let (a, b) = (items[i], items[i + 1]);
        if conflict(&a.1, &b.1) {
            continue;
        }
        if (i + 1).abs_diff(a.0) <= d && i.abs_diff(b.0) <= d {
            items.swap(i, i + 1);
        }
    }
    items.into_iter().map(|(_, r)| r).collect()
}

pub fn random_set<R: Rng>(rng: &mut R, n: usize) -> BTreeSet<u32> {
    (0..n as u32).filter(|_| rng.gen_bool(0.5)).collect()
}
