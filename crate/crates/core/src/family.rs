//! Exponential families `p(x|θ) = exp(θᵀν(x) - A(θ))` described by their
//! log-partition `A`, its gradient (the moment map) and its inverse.
//!
//! The multivariate Gaussian family is packed as
//! `θ = (Σ⁻¹μ, Θ)` where `Θ` lists the upper triangle of `-½Σ⁻¹` row by row
//! with off-diagonal entries doubled, matching the sufficient statistic
//! `ν(x) = (x, x_j x_k for j ≤ k)`. The moment parameter is then
//! `η = (μ, E[x_j x_k] for j ≤ k)`.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{ensure_same_dim, Error, Result};
use crate::gaussian::{cholesky, log_det, GaussianParams};

/// Natural parameter vector `θ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct NaturalParams(Vec<f64>);

/// Mean parameter vector `η = ∇A(θ)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct MomentParams(Vec<f64>);

macro_rules! param_vector {
    ($name:ident) => {
        impl $name {
            pub fn new(values: Vec<f64>) -> Self {
                $name(values)
            }

            pub fn as_slice(&self) -> &[f64] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            /// `w·self + (1-w)·other`.
            pub fn lerp(&self, other: &Self, w: f64) -> Self {
                $name(self.0.iter().zip(&other.0).map(|(a, b)| w * a + (1.0 - w) * b).collect())
            }
        }
    };
}

param_vector!(NaturalParams);
param_vector!(MomentParams);

pub trait ExponentialFamily {
    /// Length of the natural parameter vector.
    fn param_dim(&self) -> usize;

    /// `A(θ)`. Errors outside the natural domain.
    fn log_partition(&self, theta: &NaturalParams) -> Result<f64>;

    /// `∇A(θ)`, the moment map.
    fn grad_log_partition(&self, theta: &NaturalParams) -> Result<MomentParams>;

    /// `(∇A)⁻¹(η)`. Errors when `η` is not a realizable moment vector.
    fn inv_grad_log_partition(&self, eta: &MomentParams) -> Result<NaturalParams>;

    /// Convex conjugate `A*(η) = ⟨θ, η⟩ - A(θ)` with `θ = (∇A)⁻¹(η)`.
    fn dual_log_partition(&self, eta: &MomentParams) -> Result<f64> {
        let theta = self.inv_grad_log_partition(eta)?;
        let inner: f64 = theta.as_slice().iter().zip(eta.as_slice()).map(|(t, e)| t * e).sum();
        Ok(inner - self.log_partition(&theta)?)
    }
}

/// Multivariate normal distributions of a fixed dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussianFamily {
    dim: usize,
}

impl GaussianFamily {
    pub fn new(dim: usize) -> Self {
        GaussianFamily { dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn tri_len(&self) -> usize {
        self.dim * (self.dim + 1) / 2
    }

    fn check(&self, len: usize) -> Result<()> {
        ensure_same_dim(self.param_dim(), len)
    }

    /// Splits `θ` into the linear term `Σ⁻¹μ` and the precision matrix `Σ⁻¹`.
    fn unpack_natural(&self, theta: &NaturalParams) -> Result<(DVector<f64>, DMatrix<f64>)> {
        self.check(theta.len())?;
        let d = self.dim;
        let t = theta.as_slice();
        let linear = DVector::from_column_slice(&t[..d]);
        let mut precision = DMatrix::zeros(d, d);
        let mut idx = d;
        for j in 0..d {
            for k in j..d {
                if j == k {
                    precision[(j, j)] = -2.0 * t[idx];
                } else {
                    precision[(j, k)] = -t[idx];
                    precision[(k, j)] = -t[idx];
                }
                idx += 1;
            }
        }
        Ok((linear, precision))
    }

    fn pack_natural(&self, linear: &DVector<f64>, precision: &DMatrix<f64>) -> NaturalParams {
        let d = self.dim;
        let mut out = Vec::with_capacity(self.param_dim());
        out.extend(linear.iter());
        for j in 0..d {
            for k in j..d {
                let v = 0.5 * (precision[(j, k)] + precision[(k, j)]);
                out.push(if j == k { -0.5 * v } else { -v });
            }
        }
        NaturalParams(out)
    }

    fn pack_moment(&self, mean: &DVector<f64>, second: &DMatrix<f64>) -> MomentParams {
        let d = self.dim;
        let mut out = Vec::with_capacity(self.param_dim());
        out.extend(mean.iter());
        for j in 0..d {
            for k in j..d {
                out.push(0.5 * (second[(j, k)] + second[(k, j)]));
            }
        }
        MomentParams(out)
    }

    fn unpack_moment(&self, eta: &MomentParams) -> Result<(DVector<f64>, DMatrix<f64>)> {
        self.check(eta.len())?;
        let d = self.dim;
        let e = eta.as_slice();
        let mean = DVector::from_column_slice(&e[..d]);
        let mut second = DMatrix::zeros(d, d);
        let mut idx = d;
        for j in 0..d {
            for k in j..d {
                second[(j, k)] = e[idx];
                second[(k, j)] = e[idx];
                idx += 1;
            }
        }
        Ok((mean, second))
    }

    pub fn natural_from_gaussian(&self, g: &GaussianParams) -> Result<NaturalParams> {
        ensure_same_dim(self.dim, g.dim())?;
        let precision = g.cholesky().inverse();
        let linear = &precision * g.mean();
        Ok(self.pack_natural(&linear, &precision))
    }

    pub fn gaussian_from_natural(&self, theta: &NaturalParams) -> Result<GaussianParams> {
        let (linear, precision) = self.unpack_natural(theta)?;
        let chol = cholesky(&precision)
            .map_err(|_| Error::Domain("precision block is not positive definite".into()))?;
        let cov = chol.inverse();
        let mean = &cov * linear;
        GaussianParams::new(mean, cov)
    }

    pub fn moment_from_gaussian(&self, g: &GaussianParams) -> Result<MomentParams> {
        ensure_same_dim(self.dim, g.dim())?;
        let second = g.cov() + g.mean() * g.mean().transpose();
        Ok(self.pack_moment(g.mean(), &second))
    }

    pub fn gaussian_from_moment(&self, eta: &MomentParams) -> Result<GaussianParams> {
        let (mean, second) = self.unpack_moment(eta)?;
        let cov = second - &mean * mean.transpose();
        cholesky(&cov).map_err(|_| Error::Domain("moment vector has no positive definite covariance".into()))?;
        GaussianParams::new(mean, cov)
    }
}

impl ExponentialFamily for GaussianFamily {
    fn param_dim(&self) -> usize {
        self.dim + self.tri_len()
    }

    fn log_partition(&self, theta: &NaturalParams) -> Result<f64> {
        let (linear, precision) = self.unpack_natural(theta)?;
        let chol = cholesky(&precision)
            .map_err(|_| Error::Domain("precision block is not positive definite".into()))?;
        let d = self.dim as f64;
        Ok(0.5 * linear.dot(&chol.solve(&linear)) - 0.5 * log_det(&chol)
            + 0.5 * d * (2.0 * std::f64::consts::PI).ln())
    }

    fn grad_log_partition(&self, theta: &NaturalParams) -> Result<MomentParams> {
        let g = self.gaussian_from_natural(theta)?;
        self.moment_from_gaussian(&g)
    }

    fn inv_grad_log_partition(&self, eta: &MomentParams) -> Result<NaturalParams> {
        let g = self.gaussian_from_moment(eta)?;
        self.natural_from_gaussian(&g)
    }
}

/// `θ = (Σ⁻¹μ, upper triangle of -½Σ⁻¹)` in the packing of [`GaussianFamily`].
pub fn gaussian_to_natural(g: &GaussianParams) -> NaturalParams {
    GaussianFamily::new(g.dim())
        .natural_from_gaussian(g)
        .expect("family dimension matches")
}

pub fn natural_to_gaussian(theta: &NaturalParams, dim: usize) -> Result<GaussianParams> {
    GaussianFamily::new(dim).gaussian_from_natural(theta)
}

pub fn natural_to_moment<F: ExponentialFamily + ?Sized>(theta: &NaturalParams, fam: &F) -> Result<MomentParams> {
    fam.grad_log_partition(theta)
}

pub fn moment_to_natural<F: ExponentialFamily + ?Sized>(eta: &MomentParams, fam: &F) -> Result<NaturalParams> {
    fam.inv_grad_log_partition(eta)
}

/// Bernoulli distributions with natural parameter `θ = logit P(x = 1)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BernoulliFamily;

impl ExponentialFamily for BernoulliFamily {
    fn param_dim(&self) -> usize {
        1
    }

    fn log_partition(&self, theta: &NaturalParams) -> Result<f64> {
        ensure_same_dim(1, theta.len())?;
        let t = theta.as_slice()[0];
        // softplus
        Ok(t.max(0.0) + (-t.abs()).exp().ln_1p())
    }

    fn grad_log_partition(&self, theta: &NaturalParams) -> Result<MomentParams> {
        ensure_same_dim(1, theta.len())?;
        let t = theta.as_slice()[0];
        Ok(MomentParams(vec![1.0 / (1.0 + (-t).exp())]))
    }

    fn inv_grad_log_partition(&self, eta: &MomentParams) -> Result<NaturalParams> {
        ensure_same_dim(1, eta.len())?;
        let m = eta.as_slice()[0];
        if !(m > 0.0 && m < 1.0) {
            return Err(Error::Domain(format!("Bernoulli mean {m} outside (0, 1)")));
        }
        Ok(NaturalParams(vec![(m / (1.0 - m)).ln()]))
    }
}
