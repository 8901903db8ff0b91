#![allow(dead_code)]

use divfront::{GaussianParams, Histogram};
use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::{Exp1, StandardNormal};

/// Uniform draw from the simplex, mixed with the uniform histogram so that
/// every entry is at least `floor / n`.
pub fn random_histogram<R: Rng>(rng: &mut R, n: usize, floor: f64) -> Histogram {
    let w: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let s: f64 = w.iter().sum();
    Histogram::new(w.iter().map(|x| (1.0 - floor) * x / s + floor / n as f64).collect()).unwrap()
}

/// Gaussian with standard-normal mean entries and covariance `AAᵀ + 0.2 I`.
pub fn random_gaussian<R: Rng>(rng: &mut R, d: usize) -> GaussianParams {
    let mean = DVector::from_fn(d, |_, _| rng.sample::<f64, _>(StandardNormal));
    let a = DMatrix::from_fn(d, d, |_, _| rng.sample::<f64, _>(StandardNormal) * 0.8);
    let cov = &a * a.transpose() + DMatrix::identity(d, d) * 0.2;
    GaussianParams::new(mean, cov).unwrap()
}

/// Symmetric Hausdorff distance between two finite point sets in the L∞ norm.
pub fn set_distance(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let one_way = |x: &[(f64, f64)], y: &[(f64, f64)]| {
        x.iter()
            .map(|p| y.iter().map(|q| (p.0 - q.0).abs().max((p.1 - q.1).abs())).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}
