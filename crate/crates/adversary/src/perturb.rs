//! Random certified perturbations: bounded local reordering plus replaced outliers.

use core_predictions::{DelayCertificate, Request, RequestSequence};
use rand::seq::index::sample;
use rand::Rng;

use crate::error::{AdvError, Result};
use crate::instance::Instance;

/// `rho` with every element within `d` of its predicted position and up to `k`
/// positions replaced by copies of random predicted requests.
pub fn perturb<R: Rng + ?Sized>(
    rhohat: &[Request],
    d: usize,
    k: usize,
    rng: &mut R,
) -> Result<(Vec<Request>, DelayCertificate)> {
    perturb_with(rhohat, d, k, rng, |_, _| true, |_| true, |rng, _, _| rhohat[rng.gen_range(0..rhohat.len())])
}

/// As [`perturb`], keeping the sequence valid for `instance`.
pub fn perturb_for<R: Rng + ?Sized>(
    instance: &Instance,
    rhohat: &[Request],
    d: usize,
    k: usize,
    rng: &mut R,
) -> Result<(Vec<Request>, DelayCertificate)> {
    perturb_with(
        rhohat,
        d,
        k,
        rng,
        |a, b| instance.swappable(a, b),
        |r| instance.replaceable(r),
        |rng, prefix, original| instance.outlier(rng, prefix, original),
    )
}

/// Outlier positions are fixed points of the reordering, so restricting both
/// sequences to the inliers never increases a displacement.
pub fn perturb_with<R, S, P, O>(
    rhohat: &[Request],
    d: usize,
    k: usize,
    rng: &mut R,
    swappable: S,
    replaceable: P,
    mut outlier: O,
) -> Result<(Vec<Request>, DelayCertificate)>
where
    R: Rng + ?Sized,
    S: Fn(&Request, &Request) -> bool,
    P: Fn(&Request) -> bool,
    O: FnMut(&mut R, &[Request], &Request) -> Request,
{
    let t = rhohat.len();
    if k > t {
        return Err(AdvError::Argument(format!("k = {k} exceeds T = {t}")));
    }
    let candidates: Vec<usize> = (0..t).filter(|&i| replaceable(&rhohat[i])).collect();
    let mut pinned = vec![false; t];
    for i in sample(rng, candidates.len(), k.min(candidates.len())) {
        pinned[candidates[i]] = true;
    }
    let mut items: Vec<usize> = (0..t).collect();
    if d > 0 && t > 1 {
        for _ in 0..t * (d + 1) * 4 {
            let i = rng.gen_range(0..t - 1);
            let (a, b) = (items[i], items[i + 1]);
            if pinned[a] || pinned[b] || !swappable(&rhohat[a], &rhohat[b]) {
                continue;
            }
            if (i + 1).abs_diff(a) <= d && i.abs_diff(b) <= d {
                items.swap(i, i + 1);
            }
        }
    }
    let mut rho: Vec<Request> = items.iter().map(|&i| rhohat[i]).collect();
    for p in 0..t {
        if pinned[p] {
            rho[p] = outlier(rng, &rho[..p], &rhohat[p]);
        }
    }
    let inliers: Vec<usize> = (1..=t).filter(|&p| !pinned[p - 1]).collect();
    let mut restricted = vec![0usize; t + 1];
    for (j, &p) in inliers.iter().enumerate() {
        restricted[p] = j + 1;
    }
    let mut position = vec![0usize; t];
    for (p, &h) in items.iter().enumerate() {
        position[h] = p + 1;
    }
    let pi = inliers.iter().map(|&h| restricted[position[h - 1]]).collect();
    let outliers = pinned.iter().filter(|&&x| x).count();
    let cert = DelayCertificate { pi, i: inliers.clone(), ihat: inliers, d, k: outliers };
    cert.verify(&RequestSequence::new(rho.clone()), &RequestSequence::new(rhohat.to_vec()))?;
    Ok((rho, cert))
}

/// Random instance and prediction, perturbed into a certified actual sequence.
pub fn certified_workload<R: Rng + ?Sized>(
    problem: crate::instance::Problem,
    n: usize,
    len: usize,
    d: usize,
    k: usize,
    rng: &mut R,
) -> Result<crate::workload::WorkloadPair> {
    let instance = Instance::random(problem, n, rng)?;
    let rhohat = instance.random_sequence(rng, len, 0.3);
    let (rho, cert) = perturb_for(&instance, &rhohat, d, k.min(len), rng)?;
    crate::workload::WorkloadPair::new(instance, rhohat.into(), rho.into(), cert)
}
