//! Seeded synthetic sample sets used by the test suites, benchmarks and
//! examples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::estimation::SampleMatrix;
use crate::gaussian::GaussianParams;

pub fn gaussian_samples(g: &GaussianParams, n: usize, seed: u64) -> Result<SampleMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut data = Vec::with_capacity(n * g.dim());
    for _ in 0..n {
        data.extend(g.sample(&mut rng).iter());
    }
    SampleMatrix::new(data, g.dim())
}

/// Standard normal draws restricted to `[-tau, tau]` by rejection.
pub fn truncated_normal_samples(n: usize, tau: f64, seed: u64) -> Result<SampleMatrix> {
    if tau.is_nan() || tau <= 0.0 {
        return Err(Error::InvalidParameter(format!("truncation threshold must be positive, got {tau}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut data = Vec::with_capacity(n);
    while data.len() < n {
        let x: f64 = rng.sample(StandardNormal);
        if x.abs() <= tau {
            data.push(x);
        }
    }
    SampleMatrix::from_column(data)
}

/// Points `u^exponent` with `u` uniform on `[0, 1]^d`. Every exponent gives
/// the same support; larger exponents pile mass up near the origin.
pub fn power_box_samples(n: usize, d: usize, exponent: f64, seed: u64) -> Result<SampleMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..n * d).map(|_| rng.random::<f64>().powf(exponent)).collect();
    SampleMatrix::new(data, d)
}

/// Points `(1 + v^exponent) / 2` per coordinate with `v` uniform on
/// `[-1, 1]^d` (odd power, sign preserved): the unit box again, with mass
/// pulled towards its centre for exponents above 1.
pub fn centered_power_box_samples(n: usize, d: usize, exponent: f64, seed: u64) -> Result<SampleMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..n * d)
        .map(|_| {
            let v: f64 = rng.random_range(-1.0..=1.0);
            0.5 * (1.0 + v.signum() * v.abs().powf(exponent))
        })
        .collect();
    SampleMatrix::new(data, d)
}
