use nalgebra::{Cholesky, DMatrix, DVector, Dyn};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{ensure_same_dim, Error, Result};

const SYMMETRY_TOL: f64 = 1e-10;

/// A multivariate normal distribution with positive definite covariance.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianParams {
    mean: DVector<f64>,
    cov: DMatrix<f64>,
}

impl GaussianParams {
    pub fn new(mean: DVector<f64>, cov: DMatrix<f64>) -> Result<Self> {
        let d = mean.len();
        if d == 0 {
            return Err(Error::InvalidDistribution("gaussian must have dimension >= 1".into()));
        }
        if cov.nrows() != d || cov.ncols() != d {
            return Err(Error::DimensionMismatch { expected: d, found: cov.nrows().max(cov.ncols()) });
        }
        if mean.iter().chain(cov.iter()).any(|v| !v.is_finite()) {
            return Err(Error::InvalidDistribution("non-finite gaussian parameter".into()));
        }
        let asym = (&cov - cov.transpose()).amax();
        if asym > SYMMETRY_TOL {
            return Err(Error::InvalidDistribution(format!("covariance not symmetric (max deviation {asym:e})")));
        }
        let cov = (&cov + cov.transpose()) * 0.5;
        cholesky(&cov)?;
        // Reject matrices that factor only thanks to rounding.
        let eig = cov.clone().symmetric_eigenvalues();
        if eig.min() <= d as f64 * f64::EPSILON * eig.max() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(GaussianParams { mean, cov })
    }

    pub fn from_rows(mean: &[f64], cov: &[Vec<f64>]) -> Result<Self> {
        let d = mean.len();
        ensure_same_dim(d, cov.len())?;
        for row in cov {
            ensure_same_dim(d, row.len())?;
        }
        let cov = DMatrix::from_fn(d, d, |i, j| cov[i][j]);
        GaussianParams::new(DVector::from_column_slice(mean), cov)
    }

    pub fn univariate(mean: f64, variance: f64) -> Result<Self> {
        GaussianParams::new(DVector::from_element(1, mean), DMatrix::from_element(1, 1, variance))
    }

    /// `N(0, I_d)`.
    pub fn standard(d: usize) -> Result<Self> {
        GaussianParams::new(DVector::zeros(d), DMatrix::identity(d, d))
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    pub fn mean(&self) -> &DVector<f64> {
        &self.mean
    }

    pub fn cov(&self) -> &DMatrix<f64> {
        &self.cov
    }

    pub(crate) fn cholesky(&self) -> Cholesky<f64, Dyn> {
        // Checked at construction.
        cholesky(&self.cov).expect("covariance is positive definite")
    }

    pub fn log_det_cov(&self) -> f64 {
        log_det(&self.cholesky())
    }

    pub fn ln_pdf(&self, x: &[f64]) -> f64 {
        let chol = self.cholesky();
        let diff = DVector::from_column_slice(x) - &self.mean;
        let z = chol.l().solve_lower_triangular(&diff).expect("nonsingular factor");
        let d = self.dim() as f64;
        -0.5 * (z.norm_squared() + log_det(&chol) + d * (2.0 * std::f64::consts::PI).ln())
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> DVector<f64> {
        let l = self.cholesky().l();
        let z = DVector::from_fn(self.dim(), |_, _| rng.sample::<f64, _>(StandardNormal));
        &self.mean + l * z
    }
}

pub(crate) fn cholesky(m: &DMatrix<f64>) -> Result<Cholesky<f64, Dyn>> {
    Cholesky::new(m.clone()).ok_or(Error::NotPositiveDefinite)
}

pub(crate) fn log_det(chol: &Cholesky<f64, Dyn>) -> f64 {
    2.0 * chol.l_dirty().diagonal().iter().map(|v| v.ln()).sum::<f64>()
}
