mod common;

use common::*;
use core_predictions::Replay;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use striangle::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn variants_agree_with_oracle(
        seed in any::<u64>(),
        n in 2usize..=40,
        len in 0usize..=400,
        d in 0usize..=10,
        k in 0usize..=5,
        p in 0.0f64..0.6,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g0 = random_graph(&mut rng, n, p);
        let rho = random_workload(&mut rng, n, len, 0.3);
        let rhohat = predict(&mut rng, &rho, d, k, n);
        let mut q = QueryOptimized::preprocess(g0.clone(), 0, &rhohat).unwrap();
        let mut u = UpdateOptimized::preprocess(g0.clone(), 0, &rhohat).unwrap();
        let mut oracle = UpdateOptBaseline::new(g0, 0);
        for r in &rho {
            let truth = oracle.process(r).unwrap();
            prop_assert_eq!(q.process(r).unwrap(), truth);
            prop_assert_eq!(q.query(), count_striangles(oracle.graph(), 0));
            prop_assert_eq!(u.process(r).unwrap(), truth);
            let vd = u.state().vd().len();
            prop_assert!(vd <= 2 * (4 * k + 2 * d));
            prop_assert!(r.is_update() || u.stats().probes <= (vd * vd) as u64);
            prop_assert!(q.stats().probes <= vd as u64);
        }
    }
}
