use std::collections::BTreeSet;

use core_predictions::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn alphabet(i: u32) -> Request {
    if i == 0 {
        Request::query()
    } else {
        Request::row(i)
    }
}

/// Sorting indices by `i + U[0, d]` displaces each element by at most `d`.
fn delayed(rhohat: &[Request], d: usize, rng: &mut ChaCha8Rng) -> Vec<Request> {
    let mut keys: Vec<(f64, usize)> =
        (0..rhohat.len()).map(|i| (i as f64 + rng.gen_range(0.0..=d as f64), i)).collect();
    keys.sort_by(|x, y| x.partial_cmp(y).unwrap());
    keys.into_iter().map(|(_, i)| rhohat[i]).collect()
}

fn seq_strategy(max_len: usize, symbols: u32) -> impl Strategy<Value = Vec<Request>> {
    prop::collection::vec(0..symbols, 0..=max_len).prop_map(|v| v.into_iter().map(alphabet).collect())
}

proptest! {
    #[test]
    fn eh_le_hamming_le_l1(pair in (0usize..=64).prop_flat_map(|n| (prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<bool>(), n)))) {
        let (s, t) = pair;
        let eh = extended_hamming(&s, &t).unwrap();
        let ham = hamming(&s, &t).unwrap();
        let l1: usize = s.iter().zip(&t).map(|(&x, &y)| (x as i32 - y as i32).unsigned_abs() as usize).sum();
        prop_assert!(eh <= ham);
        prop_assert!(ham <= l1);
        let blocks = eh_blocks(&s, &t).unwrap();
        prop_assert_eq!(blocks.len(), eh);
        for b in blocks {
            for p in b.lo..=b.hi {
                prop_assert_eq!(s[p - 1], s[b.lo - 1]);
                prop_assert_eq!(t[p - 1], t[b.lo - 1]);
            }
            prop_assert_eq!(b.sign as i32, t[b.hi - 1] as i32 - s[b.hi - 1] as i32);
        }
    }

    #[test]
    fn min_delay_matches_bruteforce(rho in seq_strategy(8, 4), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut hat = rho.clone();
        for i in (1..hat.len()).rev() {
            let j = rng.gen_range(0..=i);
            hat.swap(i, j);
        }
        let (rho, hat) = (RequestSequence::new(rho), RequestSequence::new(hat));
        prop_assert_eq!(min_delay(&rho, &hat), min_delay_bruteforce(&rho, &hat).unwrap());
        prop_assert_eq!(total_delay(&rho, &hat), total_delay_bruteforce(&rho, &hat).unwrap());
    }

    #[test]
    fn delay_list_contains_realized(rhohat in seq_strategy(60, 6), d in 0usize..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = RequestSequence::new(delayed(&rhohat, d, &mut rng));
        let rhohat = RequestSequence::new(rhohat);
        prop_assert!(min_delay(&rho, &rhohat).unwrap() <= d);
        prop_assert!(delay_to_list(&rhohat, d).covers(&rho));
    }

    #[test]
    fn symdiff_bounded_by_delay_and_outliers(rhohat in seq_strategy(80, 6), d in 0usize..6, k in 0usize..4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rho = delayed(&rhohat, d, &mut rng);
        let t = rho.len();
        let k = k.min(t);
        let mut outliers = BTreeSet::new();
        while outliers.len() < k {
            outliers.insert(rng.gen_range(0..t));
        }
        for &p in &outliers {
            rho[p] = alphabet(100 + p as u32);
        }
        let mut tr = SymDiffTracker::new();
        for (x, y) in rho.iter().zip(&rhohat) {
            tr.step(x, Some(y));
            let size: u64 = tr.counts().values().map(|c| c.unsigned_abs()).sum();
            prop_assert_eq!(size, tr.size());
            prop_assert!(tr.counts().values().all(|&c| c != 0));
            prop_assert!(tr.size() <= (4 * k + 2 * d) as u64);
        }
    }

    #[test]
    fn containment_holds_at_min_delay(rhohat in seq_strategy(60, 5), d in 0usize..8, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = RequestSequence::new(delayed(&rhohat, d, &mut rng));
        let rhohat = RequestSequence::new(rhohat);
        let m = min_delay(&rho, &rhohat).unwrap();
        prop_assert!(containment_check(&rho, &rhohat, m).unwrap());
        let cert = DelayCertificate::from_matching(&rho, &rhohat).unwrap();
        prop_assert_eq!(cert.d, m);
        prop_assert!(cert.verify(&rho, &rhohat).is_ok());
    }

    #[test]
    fn window_events_match_definition(
        steps in prop::collection::vec((0u32..6, any::<bool>(), prop::option::of(0u32..6)), 0..40),
        init in prop::collection::btree_set(0u32..6, 0..6),
        d in 0usize..6,
    ) {
        let touches: Vec<Touch<u32>> = steps
            .iter()
            .map(|&(k, on, read)| Touch { set: vec![(k, on)], read: read.into_iter().collect() })
            .collect();
        let level = WindowLevel::build(&init, &touches, d);
        let mut cur = level.cursor();
        loop {
            let (perm, active) = window_sets_bruteforce(&init, &touches, d, cur.time());
            prop_assert_eq!(&cur.permanent, &perm);
            prop_assert_eq!(&cur.active, &active);
            if !cur.advance() {
                break;
            }
        }
    }
}
