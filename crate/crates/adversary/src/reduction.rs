//! OuMv encodings into #s-triangle instances.
//!
//! Vertices: `s = 0`, `u_i = 1 + i`, `w_j = 1 + n1 + j`, with `{u_i, w_j}`
//! present iff `M[i][j] = 1`. The two-list variant adds a junk vertex.

use std::collections::{BTreeMap, BTreeSet};

use core_predictions::{Answer, DelayCertificate, ListPrediction, Request, RequestSequence};
use omv::OuMvInstance;

use crate::error::Result;
use crate::instance::Instance;
use crate::universal::{pad_locally_reducible, universal_prediction, PaddedSequence, UniversalBlock};
use crate::workload::WorkloadPair;

/// Cyclic order of an edge flip.
pub const FLIP_ORDER: usize = 2;

struct Layout {
    n1: u32,
    first: u32,
}

impl Layout {
    fn u(&self, i: usize) -> u32 {
        self.first + i as u32
    }

    fn w(&self, j: usize) -> u32 {
        self.first + self.n1 + j as u32
    }
}

fn layout(inst: &OuMvInstance, special: u32) -> Layout {
    Layout { n1: inst.matrix().rows() as u32, first: special }
}

fn encoded_instance(inst: &OuMvInstance, special: u32) -> Instance {
    let m = inst.matrix();
    let l = layout(inst, special);
    let mut edges = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m.get(i, j) {
                edges.push((l.u(i), l.w(j)));
            }
        }
    }
    Instance::Striangle { n: special as usize + m.rows() + m.cols(), s: 0, edges }
}

/// Instance for the direct reduction: `1 + n1 + n2` vertices.
pub fn striangle_instance(inst: &OuMvInstance) -> Instance {
    encoded_instance(inst, 1)
}

/// `(s, u_1) … (s, u_n1), (s, w_1) … (s, w_n2), query`, each flip of order 2.
pub fn striangle_block(inst: &OuMvInstance) -> UniversalBlock {
    let m = inst.matrix();
    let l = layout(inst, 1);
    let mut items: Vec<Request> = (0..m.rows()).map(|i| Request::flip(0, l.u(i))).collect();
    items.extend((0..m.cols()).map(|j| Request::flip(0, l.w(j))));
    let ord: BTreeMap<Request, usize> = items.iter().map(|r| (*r, FLIP_ORDER)).collect();
    items.push(Request::query());
    UniversalBlock::new(items, ord).expect("flips have order 2")
}

/// Per-round `B'_k`: the flips that change an `s`-edge to match `(u_k, v_k)`, then the query.
pub fn striangle_subsets(inst: &OuMvInstance) -> Vec<Vec<Request>> {
    let l = layout(inst, 1);
    let mut present: BTreeSet<u32> = BTreeSet::new();
    let mut out = Vec::with_capacity(inst.pairs().len());
    for (u, v) in inst.pairs() {
        let mut block = Vec::new();
        let targets = u.iter().enumerate().map(|(i, &b)| (l.u(i), b)).chain(v.iter().enumerate().map(|(j, &b)| (l.w(j), b)));
        for (x, want) in targets {
            if present.contains(&x) != want {
                block.push(Request::flip(0, x));
                if want {
                    present.insert(x);
                } else {
                    present.remove(&x);
                }
            }
        }
        block.push(Request::query());
        out.push(block);
    }
    out
}

/// Reduction sequence with the identity prediction.
pub fn gen_striangle_oumv(inst: &OuMvInstance) -> Result<WorkloadPair> {
    let rho: RequestSequence = striangle_subsets(inst).concat().into();
    let cert = DelayCertificate::from_matching(&rho, &rho).expect("identical sequences");
    WorkloadPair::new(striangle_instance(inst), rho.clone(), rho, cert)
}

/// Round bits from #s-triangle query answers: `count > 0`.
pub fn decode_bits(answers: &[Answer]) -> Vec<bool> {
    answers.iter().map(|a| matches!(a, Answer::Int(c) if *c > 0)).collect()
}

/// Two-list prediction with its realized sequence.
#[derive(Debug, Clone)]
pub struct TwoListWorkload {
    pub instance: Instance,
    pub list: ListPrediction,
    pub rho: RequestSequence,
}

/// Junk vertex `t = 1`; every bit costs exactly one flip of `(s, x)` or `(t, x)`.
pub fn gen_2list_striangle(inst: &OuMvInstance) -> TwoListWorkload {
    let l = layout(inst, 2);
    let m = inst.matrix();
    let mut present: BTreeSet<u32> = BTreeSet::new();
    let mut rho = Vec::new();
    let mut slots = Vec::new();
    for (u, v) in inst.pairs() {
        let targets = u.iter().enumerate().map(|(i, &b)| (l.u(i), b)).chain(v.iter().enumerate().map(|(j, &b)| (l.w(j), b)));
        for (x, want) in targets {
            let (hit, junk) = (Request::flip(0, x), Request::flip(1, x));
            if present.contains(&x) != want {
                rho.push(hit);
                if want {
                    present.insert(x);
                } else {
                    present.remove(&x);
                }
            } else {
                rho.push(junk);
            }
            slots.push(BTreeSet::from([hit, junk]));
        }
        rho.push(Request::query());
        slots.push(BTreeSet::from([Request::query()]));
    }
    debug_assert_eq!(rho.len(), inst.pairs().len() * (m.rows() + m.cols() + 1));
    TwoListWorkload { instance: encoded_instance(inst, 2), list: ListPrediction { slots, bound: 2 }, rho: rho.into() }
}

/// Padded reduction sequence against the repeated universal block.
#[derive(Debug, Clone)]
pub struct RhoStarWorkload {
    pub block: UniversalBlock,
    pub padded: PaddedSequence,
    pub pair: WorkloadPair,
}

/// Delay bound `(1 + C)(u + q)`.
pub fn rho_star_delay_bound(block: &UniversalBlock) -> usize {
    (1 + block.max_order()) * block.items().len()
}

pub fn striangle_rho_star(inst: &OuMvInstance) -> Result<RhoStarWorkload> {
    let block = striangle_block(inst);
    let padded = pad_locally_reducible(&block, &striangle_subsets(inst))?;
    let rhohat: RequestSequence = universal_prediction(&block, inst.pairs().len()).into();
    let rho: RequestSequence = padded.rho.clone().into();
    let cert = DelayCertificate::from_matching(&rho, &rhohat).expect("padding completes the universal multiset");
    let pair = WorkloadPair::new(striangle_instance(inst), rhohat, rho, cert)?;
    Ok(RhoStarWorkload { block, padded, pair })
}

/// Uniform random `n1 × n2` matrix with `rounds` random vector pairs.
pub fn random_oumv<R: rand::Rng + ?Sized>(n1: usize, n2: usize, rounds: usize, rng: &mut R) -> Result<OuMvInstance> {
    let rows: Vec<Vec<bool>> = (0..n1).map(|_| (0..n2).map(|_| rng.gen()).collect()).collect();
    let pairs = (0..rounds)
        .map(|_| ((0..n1).map(|_| rng.gen()).collect(), (0..n2).map(|_| rng.gen()).collect()))
        .collect();
    Ok(OuMvInstance::new(omv::BoolMatrix::from_rows(&rows)?, pairs)?)
}
