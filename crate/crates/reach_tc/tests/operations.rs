mod common;

use std::collections::BTreeSet;

use common::*;
use core_predictions::{
    levels, parallel_simulation, standalone_work, window_sets_bruteforce, Answer, Replay, Request,
    RequestSequence,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use reach_tc::*;

fn edge_set(p: &BTreeSet<Elem>) -> BTreeSet<Edge> {
    p.iter().filter_map(|e| if let Elem::Edge(e) = e { Some(*e) } else { None }).collect()
}

fn initial(g: &DiGraph) -> BTreeSet<Elem> {
    g.edges().iter().map(|&e| Elem::Edge(e)).collect()
}

fn ops(rs: &[Request]) -> Vec<Op> {
    rs.iter().map(|r| decode(r).unwrap()).collect()
}

#[test]
fn graph_basics() {
    let mut g = digraph(3, &[(0, 1)]).unwrap();
    assert_eq!(g.flip((1, 1, 1)), Err(GraphError::SelfLoop(1)));
    assert_eq!(g.flip((0, 5, 1)), Err(GraphError::Vertex { vertex: 5, n: 3 }));
    assert!(g.flip((1, 2, 1)).unwrap());
    let (d, _) = sssp(&g.adjacency(), 0, true);
    assert_eq!(d, vec![Some(0), Some(1), Some(2)]);
    let (d, _) = sssp(&g.adjacency(), 2, true);
    assert_eq!(d, vec![None, None, Some(0)]);
    assert!(decode(&Request::flip(0, 1)).is_err());
}

#[test]
fn no_predicted_updates_keeps_permanent_constant() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let g = random_digraph(&mut rng, 8, 0.2);
    let rhohat: Vec<Request> = (0..10).map(|i| Request::query_pair(i % 8, (i + 3) % 8)).collect();
    let lv = preprocess(&g, &ops(&rhohat), &[0, 2], true).unwrap();
    for l in &lv {
        assert_eq!(edge_set(&l.window.initial_permanent.iter().copied().collect()), *g.edges());
        assert!(l.window.permanent_events.iter().all(Vec::is_empty));
    }
}

#[test]
fn single_predicted_flip_leaves_window() {
    let g = digraph(4, &[(0, 1), (1, 2)]).unwrap();
    let mut rhohat = vec![Request::query_pair(0, 2); 9];
    rhohat[4] = Request::dedge(0, 1);
    let steps = predicted_touches(&g, &ops(&rhohat)).unwrap();
    for d in [0, 1, 2] {
        let l = Level::build(&g, &steps, d, true);
        let mut perm = edge_set(&l.window.initial_permanent.iter().copied().collect());
        for t in 0..=9 {
            if t > 0 {
                for &(e, on) in &l.window.permanent_events[t] {
                    if let Elem::Edge(e) = e {
                        if on {
                            perm.insert(e);
                        } else {
                            perm.remove(&e);
                        }
                    }
                }
            }
            let in_window = t + d >= 5 && t <= 5 + d;
            assert_eq!(perm.contains(&(0, 1, 1)), !in_window && t < 5, "d={d} t={t}");
            assert!(perm.contains(&(1, 2, 1)));
        }
    }
}

#[test]
fn tables_match_fresh_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..8 {
        let n = 10;
        let g = random_digraph(&mut rng, n, 0.15);
        let rhohat = random_workload(&mut rng, n, 50, 0.3);
        let steps = predicted_touches(&g, &ops(&rhohat)).unwrap();
        for d in [0, 1, 4] {
            let l = Level::build(&g, &steps, d, true);
            for t in 0..=rhohat.len() {
                let (p, a) = window_sets_bruteforce(&initial(&g), &steps, d, t);
                let pg = DiGraph::from_edges(n, &edge_set(&p).into_iter().collect::<Vec<_>>()).unwrap();
                let active: BTreeSet<u32> = l.active(t).collect();
                let expect: BTreeSet<u32> = a
                    .iter()
                    .flat_map(|e| match *e {
                        Elem::Vertex(v) => vec![v],
                        Elem::Edge((u, v, _)) => vec![u, v],
                    })
                    .collect();
                assert_eq!(active, expect);
                for &x in &active {
                    let (fresh, _) = sssp(&pg.adjacency(), x, true);
                    for y in 0..n as u32 {
                        assert_eq!(l.dist(x, y, t), Some(fresh[y as usize]));
                    }
                }
            }
        }
    }
}

#[test]
fn residuals_follow_replay() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for d in [0, 1, 3, 6] {
        let n = 12;
        let g = random_digraph(&mut rng, n, 0.1);
        let rho = random_workload(&mut rng, n, 150, 0.3);
        let rhohat = delayed(&mut rng, &rho, d);
        let steps = predicted_touches(&g, &ops(&rhohat)).unwrap();
        let mut tc = Tc::agnostic(g.clone(), &rhohat).unwrap();
        let mut oracle = TcOracle::new(g.clone());
        for r in &rho {
            assert_eq!(tc.process(r).unwrap(), oracle.process(r).unwrap());
            let t = tc.engine().time();
            for (i, lvl) in tc.levels().iter().enumerate() {
                let (p, _) = window_sets_bruteforce(&initial(&g), &steps, lvl.d(), t);
                let p = edge_set(&p);
                let f: BTreeSet<Edge> = oracle.graph().edges().difference(&p).copied().collect();
                assert_eq!(tc.engine().residual(i), &f);
                assert_eq!(tc.engine().permanent_in_e(i), p.is_subset(oracle.graph().edges()));
                if lvl.d() >= d {
                    assert!(p.is_subset(oracle.graph().edges()));
                    assert!(f.len() <= 2 * lvl.d() + 1);
                }
            }
            if r.is_query() {
                let s = tc.stats();
                let ds = s.dstar.unwrap();
                assert!(ds <= 2 * d);
                assert!(s.errset <= 2 * ds + 1);
                assert!(s.probes <= 2 * s.errset as u64 + 2);
                assert!(s.probes <= 2 * (2 * 2 * d as u64 + 1) + 2);
            }
        }
    }
}

#[test]
fn perfect_prediction_and_restore() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let g = random_digraph(&mut rng, 10, 0.2);
    let rho = random_workload(&mut rng, 10, 100, 0.4);
    let mut tc = Tc::agnostic(g.clone(), &rho).unwrap();
    for r in &rho {
        tc.process(r).unwrap();
        assert!(tc.engine().residual(0).len() <= 1);
        if r.is_query() {
            assert!(tc.engine().residual(0).is_empty());
            assert_eq!(tc.stats().dstar, Some(0));
        }
    }

    let mut tc = Tc::agnostic(g.clone(), &[]).unwrap();
    tc.process(&Request::dedge(3, 4)).unwrap();
    tc.process(&Request::dedge(3, 4)).unwrap();
    assert_eq!(tc.engine().graph(), &g);
    assert_eq!(tc.process(&Request::query_pair(5, 5)).unwrap(), Some(Answer::Bool(true)));
}

#[test]
fn garbage_prediction_falls_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    let g = random_digraph(&mut rng, 12, 0.1);
    let rho = random_workload(&mut rng, 12, 200, 0.3);
    let garbage = random_workload(&mut rng, 12, 200, 0.3);
    let mut tc = Tc::agnostic(g.clone(), &garbage).unwrap();
    let mut oracle = TcOracle::new(g);
    let mut fallbacks = 0;
    for r in &rho {
        assert_eq!(tc.process(r).unwrap(), oracle.process(r).unwrap());
        fallbacks += (r.is_query() && tc.stats().dstar.is_none()) as usize;
    }
    assert!(fallbacks > 0);
}

#[test]
fn ladder_matches_spec_ladder() {
    let g = digraph(4, &[]).unwrap();
    let tc = Tc::agnostic(g, &[]).unwrap();
    let ds: Vec<usize> = tc.levels().iter().map(Level::d).collect();
    assert_eq!(ds, levels(4));
    assert_eq!(ds, vec![0, 1, 2, 4, 8]);
}

#[test]
fn copies_under_parallel_simulation() {
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    for d in [0, 2, 8] {
        let n = 10;
        let g = random_digraph(&mut rng, n, 0.15);
        let rho = random_workload(&mut rng, n, 120, 0.3);
        let rhohat = RequestSequence::new(delayed(&mut rng, &rho, d));
        let factory = |list| TcCopy::new(g.clone(), rhohat.items(), list).unwrap();
        let report = parallel_simulation(factory, &rhohat, &rho).unwrap();
        let mut oracle = TcOracle::new(g.clone());
        let mut expected = Vec::new();
        for (i, r) in rho.iter().enumerate() {
            if let Some(Answer::Bool(b)) = oracle.process(r).unwrap() {
                expected.push((i + 1, b));
            }
        }
        assert_eq!(report.answers, expected);
        let best = levels(n)
            .into_iter()
            .chain([16, 32, 64, 128])
            .filter_map(|dd| standalone_work(|list| TcCopy::new(g.clone(), rhohat.items(), list).unwrap(), &rhohat, &rho, dd))
            .min()
            .unwrap();
        let log_t = (rho.len() as f64).log2().ceil() as u64;
        assert!(report.total_work <= 4 * log_t * best, "{} vs {}", report.total_work, best);
    }
}
