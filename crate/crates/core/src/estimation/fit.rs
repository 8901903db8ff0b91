use nalgebra::{DMatrix, DVector};

use super::samples::SampleMatrix;
use crate::error::{Error, Result};
use crate::gaussian::GaussianParams;

/// Sample mean and unbiased sample covariance, with `ridge·I` added to the
/// covariance. Fails with [`Error::NotPositiveDefinite`] when the result is
/// singular.
pub fn fit_gaussian(samples: &SampleMatrix, ridge: f64) -> Result<GaussianParams> {
    let (n, d) = (samples.nrows(), samples.ncols());
    if n < 2 {
        return Err(Error::InsufficientData { needed: 2, found: n });
    }
    if !(ridge >= 0.0 && ridge.is_finite()) {
        return Err(Error::InvalidParameter(format!("ridge must be a nonnegative number, got {ridge}")));
    }
    let mut mean = DVector::zeros(d);
    for row in samples.rows() {
        for (m, x) in mean.iter_mut().zip(row) {
            *m += x;
        }
    }
    mean /= n as f64;
    let mut cov = DMatrix::zeros(d, d);
    let mut centered = vec![0.0; d];
    for row in samples.rows() {
        for ((c, x), m) in centered.iter_mut().zip(row).zip(mean.iter()) {
            *c = x - m;
        }
        for j in 0..d {
            for k in 0..=j {
                cov[(j, k)] += centered[j] * centered[k];
            }
        }
    }
    for j in 0..d {
        for k in 0..=j {
            let v = cov[(j, k)] / (n - 1) as f64;
            cov[(j, k)] = v;
            cov[(k, j)] = v;
        }
        cov[(j, j)] += ridge;
    }
    GaussianParams::new(mean, cov)
}
