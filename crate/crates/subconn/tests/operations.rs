mod common;

use std::collections::BTreeSet;

use common::*;
use core_predictions::{levels, window_sets_bruteforce, Answer, Replay, Request, Touch};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use subconn::*;

fn touches(rhohat: &[Request]) -> Vec<Touch<u32>> {
    rhohat
        .iter()
        .map(|r| match decode(r).unwrap() {
            Op::Set(v, on) => Touch { set: vec![(v, on)], read: vec![] },
            Op::Query(u, v) => Touch { set: vec![], read: vec![u, v] },
        })
        .collect()
}

fn dfs_connected(g: &Graph, set: &BTreeSet<u32>, u: u32, v: u32) -> bool {
    let mut seen = BTreeSet::from([u]);
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for &y in set {
            if g.has(x, y) && seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.contains(&v)
}

fn replay(g: &Graph, s0: &BTreeSet<u32>, rho: &[Request], alg: &mut SubConn) {
    let mut oracle = SubConnOracle::new(g.clone(), s0);
    for r in rho {
        assert_eq!(alg.process(r).unwrap(), oracle.process(r).unwrap(), "at {}", alg.time());
    }
}

#[test]
fn all_query_prediction_keeps_permanent_constant() {
    let g = Graph::from_edges(5, &[(0, 1), (1, 2)]).unwrap();
    let s0 = BTreeSet::from([0, 1, 2, 3]);
    let rhohat = vec![Request::query_pair(0, 2); 6];
    for d in [0, 1, 3] {
        let lt = promise_preprocess(&g, &s0, &rhohat, d).unwrap();
        let steps = touches(&rhohat);
        for t in (d == 0) as usize..=6 {
            let (p, _) = window_sets_bruteforce(&s0, &steps, d, t);
            assert_eq!(p, BTreeSet::from([1, 3]));
        }
        assert!(lt.window.permanent_events.iter().skip(2).all(Vec::is_empty));
    }
}

#[test]
fn path_graph_tables() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let s0 = BTreeSet::from([0, 2]);
    let rhohat = [Request::vadd(1), Request::query_pair(0, 2), Request::query_pair(0, 2), Request::query_pair(0, 2)];
    let steps = touches(&rhohat);
    for d in [0, 1, 2] {
        let lt = promise_preprocess(&g, &s0, &rhohat, d).unwrap();
        for t in 0..=4 {
            let (p, a) = window_sets_bruteforce(&s0, &steps, d, t);
            if a.contains(&0) {
                assert_eq!(lt.connected(0, 2, t), Some(p.contains(&1)), "d={d} t={t}");
            } else {
                assert_eq!(lt.connected(0, 2, t), None);
            }
        }
    }
}

#[test]
fn tables_match_fresh_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..10 {
        let n = 12;
        let g = random_graph(&mut rng, n, 0.25);
        let s0 = random_set(&mut rng, n);
        let rhohat = random_workload(&mut rng, n, &s0, 60);
        let steps = touches(&rhohat);
        for d in [0, 1, 3] {
            let lt = promise_preprocess(&g, &s0, &rhohat, d).unwrap();
            for t in 0..=rhohat.len() {
                let (p, a) = window_sets_bruteforce(&s0, &steps, d, t);
                for &x in &a {
                    for &y in &a {
                        let mut set = p.clone();
                        set.extend([x, y]);
                        assert_eq!(lt.connected(x, y, t), Some(dfs_connected(&g, &set, x, y)));
                    }
                }
            }
        }
    }
}

#[test]
fn agnostic_preprocess_levels_and_work() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let g = random_graph(&mut rng, 4, 0.5);
    let s0 = random_set(&mut rng, 4);
    let rhohat = random_workload(&mut rng, 4, &s0, 30);
    let tl = agnostic_preprocess(&g, &s0, &rhohat).unwrap();
    assert_eq!(tl.levels.len(), levels(4).len());
    let mut best = 0;
    for lvl in &tl.levels {
        let single = promise_preprocess(&g, &s0, &rhohat, lvl.d()).unwrap();
        assert_eq!(single.tables, lvl.tables);
        best = best.max(single.work);
    }
    assert!(tl.work() <= tl.levels.len() as u64 * best);
}

#[test]
fn update_errors_and_restore() {
    let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
    let s0 = BTreeSet::from([0, 1]);
    let mut sc = SubConn::agnostic(g, &s0, &[]).unwrap();
    assert_eq!(sc.process(&Request::vdel(2)), Err(SubConnError::Absent(2)));
    assert_eq!(sc.process(&Request::vadd(0)), Err(SubConnError::Present(0)));
    assert_eq!(sc.process(&Request::vadd(9)), Err(SubConnError::Vertex { vertex: 9, n: 4 }));
    assert_eq!(sc.process(&Request::query_pair(0, 3)), Err(SubConnError::Absent(3)));
    assert!(sc.process(&Request::flip(0, 1)).is_err());
    sc.process(&Request::vadd(3)).unwrap();
    sc.process(&Request::vdel(3)).unwrap();
    assert_eq!(sc.vertex_set(), s0);
}

#[test]
fn residuals_match_replay_from_scratch() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for d in [0, 1, 2, 5] {
        let n = 14;
        let g = random_graph(&mut rng, n, 0.2);
        let s0 = random_set(&mut rng, n);
        let rho = random_workload(&mut rng, n, &s0, 120);
        let rhohat = delayed(&mut rng, &rho, d);
        let steps = touches(&rhohat);
        let mut sc = SubConn::agnostic(g.clone(), &s0, &rhohat).unwrap();
        let mut oracle = SubConnOracle::new(g, &s0);
        for r in &rho {
            sc.process(r).unwrap();
            oracle.process(r).unwrap();
            let s = oracle.vertex_set();
            for (i, lvl) in sc.timeline().levels.iter().enumerate() {
                let (p, _) = window_sets_bruteforce(&s0, &steps, lvl.d(), sc.time());
                let q: BTreeSet<u32> = s.difference(&p).copied().collect();
                assert_eq!(sc.residual(i), &q);
                assert_eq!(sc.permanent_in_s(i), p.is_subset(&s));
                if lvl.d() >= d {
                    assert!(p.is_subset(&s));
                    assert!(q.len() <= 4 * lvl.d() + 2);
                }
            }
        }
    }
}

#[test]
fn query_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let n = 16;
    let g = random_graph(&mut rng, n, 0.15);
    let s0 = random_set(&mut rng, n);
    let rho = random_workload(&mut rng, n, &s0, 200);

    let mut perfect = SubConn::agnostic(g.clone(), &s0, &rho).unwrap();
    let mut oracle = SubConnOracle::new(g.clone(), &s0);
    for r in &rho {
        let a = perfect.process(r).unwrap();
        assert_eq!(a, oracle.process(r).unwrap());
        if r.is_query() {
            assert_eq!(perfect.stats().dstar, Some(0));
            assert!(perfect.stats().probes <= 4);
        }
    }

    let rhohat = delayed(&mut rng, &rho, 5);
    let mut sc = SubConn::agnostic(g.clone(), &s0, &rhohat).unwrap();
    let mut oracle = SubConnOracle::new(g.clone(), &s0);
    for r in &rho {
        assert_eq!(sc.process(r).unwrap(), oracle.process(r).unwrap());
        if r.is_query() {
            assert!(sc.stats().dstar.unwrap() <= 10);
        }
    }

    let other_s0 = random_set(&mut rng, n);
    let garbage = random_workload(&mut rng, n, &other_s0, 200);
    let mut sc = SubConn::agnostic(g.clone(), &s0, &garbage).unwrap();
    replay(&g, &s0, &rho, &mut sc);

    let first = *s0.iter().next().unwrap();
    let mut sc = SubConn::agnostic(g, &s0, &[]).unwrap();
    assert_eq!(sc.process(&Request::query_pair(first, first)).unwrap(), Some(Answer::Bool(true)));
}

#[test]
fn promise_holds_for_large_enough_radius() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for d in [0, 1, 3, 6] {
        let n = 14;
        let g = random_graph(&mut rng, n, 0.2);
        let s0 = random_set(&mut rng, n);
        let rho = random_workload(&mut rng, n, &s0, 150);
        let rhohat = delayed(&mut rng, &rho, d);
        for promise in [d, d + 1, 2 * d + 1] {
            let mut sc = SubConn::promise(g.clone(), &s0, &rhohat, promise).unwrap();
            let mut oracle = SubConnOracle::new(g.clone(), &s0);
            for r in &rho {
                let expect = oracle.process(r).unwrap().map(|a| a == Answer::Bool(true));
                assert_eq!(sc.process_promise(r).unwrap(), expect);
            }
        }
    }
    let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
    let s0 = BTreeSet::from([0, 1, 2]);
    let rhohat = [Request::vdel(2), Request::query_pair(0, 1)];
    let mut sc = SubConn::promise(g, &s0, &rhohat, 0).unwrap();
    sc.process_promise(&Request::query_pair(0, 1)).unwrap_err();
}
