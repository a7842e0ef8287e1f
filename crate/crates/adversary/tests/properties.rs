use std::collections::BTreeMap;

use adversary::*;
use core_predictions::{min_delay, Request};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_block(rng: &mut ChaCha8Rng) -> UniversalBlock {
    let kinds = rng.gen_range(1..=4u32);
    let mut items = Vec::new();
    let mut ord = BTreeMap::new();
    for x in 0..kinds {
        let r = Request::flip(0, x + 1);
        ord.insert(r, rng.gen_range(1..=3));
        for _ in 0..rng.gen_range(1..=3) {
            items.push(r);
        }
    }
    for _ in 0..rng.gen_range(1..=2) {
        items.push(Request::query());
    }
    items.shuffle(rng);
    UniversalBlock::new(items, ord).unwrap()
}

fn random_subset(rng: &mut ChaCha8Rng, b: &UniversalBlock) -> Vec<Request> {
    let mut s: Vec<Request> = b.items().iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
    s.shuffle(rng);
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn padding_meets_count_bounds(seed in any::<u64>(), n3 in 1usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_block(&mut rng);
        let subsets: Vec<Vec<Request>> = (0..n3).map(|_| random_subset(&mut rng, &b)).collect();
        let padded = pad_locally_reducible(&b, &subsets).unwrap();
        prop_assert!(check_rho_star(&b, &padded).is_ok());
        let d = min_delay(&padded.rho.clone().into(), &universal_prediction(&b, n3).into()).unwrap();
        prop_assert!(d <= rho_star_delay_bound(&b));
    }

    #[test]
    fn striangle_rho_star_decodes(seed in any::<u64>(), n in 1usize..=8, n3 in 1usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_oumv(n, n, n3, &mut rng).unwrap();
        let w = striangle_rho_star(&inst).unwrap();
        prop_assert!(check_rho_star(&w.block, &w.padded).is_ok());
        prop_assert_eq!(decode_bits(&w.pair.answers), inst.answers());
        prop_assert!(w.pair.certificate.d <= 3 * (2 * n + 1));
        let two = gen_2list_striangle(&inst);
        prop_assert!(two.list.covers(&two.rho));
    }

    #[test]
    fn certified_workloads_verify(
        seed in any::<u64>(),
        p in 0usize..5,
        n in 2usize..=12,
        len in 0usize..=80,
        d in 0usize..=6,
        k in 0usize..=4,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = certified_workload(Problem::ALL[p], n, len, d, k, &mut rng).unwrap();
        prop_assert!(w.certificate.d <= d && w.certificate.k <= k);
        prop_assert!(w.verify().is_ok());
    }

    #[test]
    fn amplified_contains_original(seed in any::<u64>(), len in 0usize..=30, eps in 0.01f64..0.95) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho: Vec<Request> = (0..len).map(|i| Request::row(i as u32)).collect();
        let out = eps_amplify(&rho, Request::query(), eps, &mut rng).unwrap();
        let a = amplification_factor(eps).unwrap();
        prop_assert_eq!(out.len(), (a + 1) * len);
        prop_assert!(is_subsequence(&rho, &out));
    }
}
