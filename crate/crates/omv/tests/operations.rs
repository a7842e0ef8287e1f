use core_predictions::{extended_hamming, parse_bits};
use omv::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn bits(s: &str) -> Vec<bool> {
    parse_bits(s).unwrap()
}

fn random_matrix(rng: &mut ChaCha8Rng, n1: usize, n2: usize) -> BoolMatrix {
    let rows: Vec<Vec<bool>> = (0..n1).map(|_| (0..n2).map(|_| rng.gen()).collect()).collect();
    BoolMatrix::from_rows(&rows).unwrap()
}

fn random_bits(rng: &mut ChaCha8Rng, n: usize) -> Vec<bool> {
    (0..n).map(|_| rng.gen()).collect()
}

fn dot(m: &BoolMatrix, j: usize, v: &[bool]) -> i64 {
    (0..m.cols()).filter(|&k| m.get(j, k) && v[k]).count() as i64
}

#[test]
fn bool_mv_examples() {
    let id = BoolMatrix::identity(3).unwrap();
    assert_eq!(bool_mv(&id, &bits("010")).unwrap(), bits("010"));
    let ones = BoolMatrix::from_rows(&[bits("11"), bits("11")]).unwrap();
    assert_eq!(bool_mv(&ones, &bits("00")).unwrap(), bits("00"));
    let m = BoolMatrix::from_rows(&[bits("10"), bits("11")]).unwrap();
    assert_eq!(bool_mv(&m, &bits("10")).unwrap(), bits("11"));
    assert!(matches!(bool_mv(&m, &bits("1")), Err(OmvError::Dimension { .. })));
}

#[test]
fn matrix_validation_and_text() {
    assert_eq!(BoolMatrix::zeros(0, 3), Err(OmvError::Empty));
    let m = BoolMatrix::from_rows(&[bits("101"), bits("011")]).unwrap();
    assert_eq!(BoolMatrix::from_text(&m.to_text()).unwrap(), m);
    let wide = BoolMatrix::identity(130).unwrap();
    assert!(wide.get(129, 129) && !wide.get(129, 128));
}

#[test]
fn oumv_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let id = BoolMatrix::identity(4).unwrap();
    assert!(!oumv_round(&id, &bits("0000"), &bits("1111")).unwrap());
    assert!(oumv_round(&id, &bits("1000"), &bits("1000")).unwrap());
    for _ in 0..50 {
        let m = random_matrix(&mut rng, 4, 4);
        let u = random_bits(&mut rng, 4);
        let v = random_bits(&mut rng, 4);
        let mut oracle = false;
        for i in 0..4 {
            for j in 0..4 {
                oracle |= u[i] && m.get(i, j) && v[j];
            }
        }
        assert_eq!(oumv_round(&m, &u, &v).unwrap(), oracle);
    }
}

#[test]
fn eh_preprocess_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let m = random_matrix(&mut rng, 5, 5);
    let zero = eh_preprocess(&m, &vec![vec![false; 5]; 3]).unwrap();
    assert!(zero.yhat.iter().flatten().all(|&y| y == 0));

    let preds: Vec<Vec<bool>> = (0..4).map(|_| random_bits(&mut rng, 5)).collect();
    let id = eh_preprocess(&BoolMatrix::identity(5).unwrap(), &preds).unwrap();
    for (y, p) in id.yhat.iter().zip(&preds) {
        assert_eq!(*y, p.iter().map(|&b| b as i64).collect::<Vec<_>>());
    }

    let st = eh_preprocess(&m, &preds).unwrap();
    for (i, p) in preds.iter().enumerate() {
        for j in 0..5 {
            assert_eq!(st.yhat[i][j], dot(&m, j, p));
            for a in 1..=5 {
                for b in a..=5 {
                    let direct = (a - 1..b).filter(|&k| m.get(j, k)).count() as i64;
                    assert_eq!(st.range_sum(j, a, b), direct);
                }
            }
        }
    }
    assert!(eh_preprocess(&m, &[bits("1")]).is_err());
}

#[test]
fn eh_query_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let m = random_matrix(&mut rng, 6, 6);
    let p = random_bits(&mut rng, 6);
    let st = eh_preprocess(&m, &[p.clone()]).unwrap();
    let same = eh_query(&st, 0, &p).unwrap();
    assert_eq!((same.arith, same.corrections), (st.yhat[0].clone(), 0));

    let id = eh_preprocess(&BoolMatrix::identity(4).unwrap(), &[bits("0000")]).unwrap();
    let a = eh_query(&id, 0, &bits("0011")).unwrap();
    assert_eq!(a.arith, vec![0, 0, 1, 1]);
    assert_eq!(a.boolean, bits("0011"));
    assert_eq!(a.corrections, 1);

    for _ in 0..30 {
        let v = random_bits(&mut rng, 6);
        let q = eh_query(&st, 0, &v).unwrap();
        let oracle: Vec<i64> = (0..6).map(|j| dot(&m, j, &v)).collect();
        assert_eq!(q.arith, oracle);
        assert_eq!(q.corrections, extended_hamming(&p, &v).unwrap());
    }
    assert_eq!(eh_query(&st, 1, &p), Err(OmvError::Round { index: 1, rounds: 1 }));
    assert!(matches!(eh_query(&st, 0, &bits("1")), Err(OmvError::Dimension { .. })));
}

#[test]
fn pluggable_multiplier() {
    struct Counting(std::cell::Cell<usize>);
    impl IntMultiplier for Counting {
        fn products(&self, m: &BoolMatrix, vs: &[Vec<bool>]) -> Result<Vec<Vec<i64>>> {
            self.0.set(vs.len());
            NaiveMultiplier.products(m, vs)
        }
    }
    let c = Counting(Default::default());
    let m = BoolMatrix::identity(3).unwrap();
    let st = eh_preprocess_with(&m, &[bits("101"), bits("010")], &c).unwrap();
    assert_eq!(c.0.get(), 2);
    assert_eq!(st.yhat[1], vec![0, 1, 0]);
}

#[test]
fn sparse_partition_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let m = random_matrix(&mut rng, 8, 8);
    let qs: Vec<Vec<bool>> = (0..20).map(|_| random_bits(&mut rng, 8)).collect();
    let oracle: Vec<Vec<bool>> = qs.iter().map(|v| bool_mv(&m, v).unwrap()).collect();
    assert_eq!(group_count(8, 1.0).unwrap(), 1);
    assert_eq!(group_count(8, 1e-9).unwrap(), 8);
    assert_eq!(group_size(8, 0.5).unwrap(), 2);
    for t in [1.0, 1e-9, 0.5] {
        assert_eq!(sparse_partition_solve(&m, &qs, t).unwrap(), oracle);
    }
    for t in [0.0, -0.5, 1.5, f64::NAN] {
        assert!(matches!(sparse_partition_solve(&m, &qs, t), Err(OmvError::Exponent(_))));
    }
}

#[test]
fn bit_accurate_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let m = random_matrix(&mut rng, 6, 6);
    let fills: Vec<Vec<bool>> = (0..10).map(|_| random_bits(&mut rng, 6)).collect();
    let oracle: Vec<Vec<bool>> = fills.iter().map(|v| bool_mv(&m, v).unwrap()).collect();

    let exact: Vec<Partial> = fills
        .iter()
        .map(|v| Partial(v.iter().map(|&b| if b { Tri::One } else { Tri::Zero }).collect()))
        .collect();
    let r = bit_accurate_solve(&m, &exact, &fills).unwrap();
    assert_eq!(r.outputs, oracle);
    assert!(r.correction_work.iter().all(|&w| w == 0));

    let stars = vec![Partial(vec![Tri::Star; 6]); 10];
    let r = bit_accurate_solve(&m, &stars, &fills).unwrap();
    assert_eq!(r.outputs, oracle);

    let half: Vec<Partial> = exact
        .iter()
        .map(|p| Partial(p.0.iter().enumerate().map(|(k, &t)| if k % 2 == 0 { t } else { Tri::Star }).collect()))
        .collect();
    let r = bit_accurate_solve(&m, &half, &fills).unwrap();
    assert_eq!(r.outputs, oracle);
    assert!(r.correction_work.iter().all(|&w| w <= 6 * 3));

    let bad: Partial = "1*****".parse().unwrap();
    assert_eq!(bad.to_string(), "1*****");
    assert_eq!(
        bit_accurate_solve(&m, &[bad], &[bits("011111")]),
        Err(OmvError::Contradiction { round: 0, pos: 0 })
    );
}

#[test]
fn oumv_instance_round_trips_through_json() {
    let m = BoolMatrix::from_rows(&[vec![true, false, true], vec![false, true, false]]).unwrap();
    let x = OuMvInstance::new(m, vec![(vec![true, false], vec![false, false, true])]).unwrap();
    assert_eq!(x.answers(), vec![true]);
    let json = serde_json::to_string(&x).unwrap();
    assert!(json.contains("\"101\""));
    assert_eq!(serde_json::from_str::<OuMvInstance>(&json).unwrap(), x);
    assert!(OuMvInstance::new(x.matrix().clone(), vec![(vec![true], vec![true; 3])]).is_err());
}
