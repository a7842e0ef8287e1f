#![allow(dead_code)]

use core_predictions::Request;
use erickson::Matrix;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, range: i64) -> Matrix {
    let rows: Vec<Vec<i64>> =
        (0..n).map(|_| (0..n).map(|_| rng.gen_range(-range..=range)).collect()).collect();
    Matrix::from_rows(&rows).unwrap()
}

pub fn random_request<R: Rng>(rng: &mut R, n: usize, q: f64) -> Request {
    if rng.gen_bool(q) {
        return Request::query();
    }
    let x = rng.gen_range(0..n as u32);
    if rng.gen_bool(0.5) {
        Request::row(x)
    } else {
        Request::col(x)
    }
}

pub fn random_workload<R: Rng>(rng: &mut R, n: usize, len: usize, q: f64) -> Vec<Request> {
    (0..len).map(|_| random_request(rng, n, q)).collect()
}

/// Prediction with displacement at most `d` and `k` replaced positions.
pub fn predict<R: Rng>(rng: &mut R, rho: &[Request], d: usize, k: usize, n: usize) -> Vec<Request> {
    let mut keyed: Vec<(usize, usize)> = (0..rho.len()).map(|i| (i + rng.gen_range(0..=d), i)).collect();
    keyed.sort();
    let mut out: Vec<Request> = keyed.into_iter().map(|(_, i)| rho[i]).collect();
    let mut pos: Vec<usize> = (0..out.len()).collect();
    pos.shuffle(rng);
    for &p in pos.iter().take(k) {
        out[p] = random_request(rng, n, 0.3);
    }
    out
}
