mod common;

use std::collections::BTreeSet;

use apsp::*;
use common::*;
use core_predictions::{window_sets_bruteforce, Answer, Replay, Request};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use reach_tc::{predicted_touches, DiGraph, Elem, Level};

fn ops(rs: &[Request]) -> Vec<reach_tc::Op> {
    rs.iter().map(|r| decode(r).unwrap()).collect()
}

#[test]
fn decode_rejects_other_payloads() {
    assert!(decode(&Request::dedge(0, 1)).is_err());
    assert!(decode(&Request::wedge(0, 1, 4)).is_ok());
}

#[test]
fn no_predicted_updates_keeps_tables_constant() {
    let g = DiGraph::from_edges(4, &[(0, 1, 2), (1, 2, 5), (0, 2, 9)]).unwrap();
    let rhohat = vec![Request::query_pair(0, 2); 6];
    let steps = predicted_touches(&g, &ops(&rhohat)).unwrap();
    let l = Level::build(&g, &steps, 1, false);
    for t in 0..=6 {
        assert_eq!(l.dist(0, 2, t), Some(Some(7)));
        assert_eq!(l.dist(0, 3, t), Some(None));
    }
}

#[test]
fn tables_match_bellman_ford() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..6 {
        let n = 9;
        let g = random_digraph(&mut rng, n, 0.2);
        let rhohat = random_workload(&mut rng, n, 40, 0.3);
        let steps = predicted_touches(&g, &ops(&rhohat)).unwrap();
        let initial: BTreeSet<Elem> = g.edges().iter().map(|&e| Elem::Edge(e)).collect();
        for d in [0, 2, 5] {
            let l = Level::build(&g, &steps, d, false);
            for t in 0..=rhohat.len() {
                let (p, _) = window_sets_bruteforce(&initial, &steps, d, t);
                let pe: Vec<(u32, u32, u64)> =
                    p.iter().filter_map(|e| if let Elem::Edge(e) = e { Some(*e) } else { None }).collect();
                for a in l.active(t).collect::<Vec<_>>() {
                    let bf = bellman_ford(n, &pe, a);
                    for b in 0..n as u32 {
                        assert_eq!(l.dist(a, b, t), Some(bf[b as usize]));
                    }
                }
            }
        }
    }
}

#[test]
fn query_examples() {
    let g = DiGraph::from_edges(4, &[(0, 1, 2), (1, 2, 5)]).unwrap();
    let mut a = Apsp::agnostic(g.clone(), &[]).unwrap();
    assert_eq!(a.process(&Request::query_pair(2, 2)).unwrap(), Some(Answer::Dist(Some(0))));
    assert_eq!(a.process(&Request::query_pair(0, 3)).unwrap(), Some(Answer::Dist(None)));
    assert_eq!(a.process(&Request::query_pair(0, 2)).unwrap(), Some(Answer::Dist(Some(7))));
    a.process(&Request::wedge(0, 2, 3)).unwrap();
    assert_eq!(a.query(0, 2), Some(3));
    a.process(&Request::wedge(0, 2, 1)).unwrap();
    assert_eq!(a.query(0, 2), Some(1));
    a.process(&Request::wedge(0, 2, 1)).unwrap();
    a.process(&Request::wedge(0, 2, 3)).unwrap();
    assert_eq!(a.engine().graph(), &g);
    assert_eq!(Answer::Dist(None).to_string(), "inf");
}

#[test]
fn certified_workloads_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for d in [0, 1, 2, 4, 8] {
        let n = 12;
        let g = random_digraph(&mut rng, n, 0.15);
        let rho = random_workload(&mut rng, n, 150, 0.3);
        let rhohat = delayed(&mut rng, &rho, d);
        let mut a = Apsp::agnostic(g.clone(), &rhohat).unwrap();
        let mut oracle = ApspOracle::new(g);
        for r in &rho {
            let truth = oracle.process(r).unwrap();
            assert_eq!(a.process(r).unwrap(), truth);
            if let Some(Answer::Dist(x)) = truth {
                let edges: Vec<_> = oracle.graph().edges().iter().copied().collect();
                if let reach_tc::Op::Query(u, v) = decode(r).unwrap() {
                    assert_eq!(bellman_ford(n, &edges, u)[v as usize], x);
                }
                let s = a.stats();
                assert!(s.dstar.unwrap() <= 2 * d);
                assert!(s.probes <= 2 * s.errset as u64 + 2);
            }
        }
    }
}

#[test]
fn garbage_prediction_is_still_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let g = random_digraph(&mut rng, 10, 0.2);
    let rho = random_workload(&mut rng, 10, 150, 0.3);
    let garbage = random_workload(&mut rng, 10, 150, 0.3);
    let mut a = Apsp::agnostic(g.clone(), &garbage).unwrap();
    let mut oracle = ApspOracle::new(g);
    for r in &rho {
        assert_eq!(a.process(r).unwrap(), oracle.process(r).unwrap());
    }
}
