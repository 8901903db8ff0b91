//! Closed-form divergences: discrete Rényi of every order, Gaussian Rényi and
//! KL, the Funk weak metric, and exponential-family KL as a Bregman divergence.
//!
//! All results are in nats. `f64::INFINITY` is an ordinary return value and
//! means a support violation; a closed form that does not exist is reported
//! as [`Error::DivergenceUndefined`].

use nalgebra::{DMatrix, SymmetricEigen};

use crate::alpha::Alpha;
use crate::error::{ensure_same_dim, Error, Result};
use crate::family::{ExponentialFamily, NaturalParams};
use crate::gaussian::{cholesky, log_det, GaussianParams};
use crate::histogram::Histogram;

/// Two histograms closer than this in total variation are treated as equal.
pub const EQUALITY_TOL: f64 = 1e-12;

/// `log Σ exp(x_i)` with a max shift. Empty or all `-∞` input gives `-∞`.
pub fn log_sum_exp<I: IntoIterator<Item = f64>>(xs: I) -> f64 {
    let xs: Vec<f64> = xs.into_iter().collect();
    let max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return max;
    }
    max + xs.iter().map(|&x| (x - max).exp()).sum::<f64>().ln()
}

fn nonneg(v: f64) -> f64 {
    // rounding can leave tiny negatives
    v.max(0.0)
}

fn support_violation(p: &Histogram, q: &Histogram) -> bool {
    p.probs().iter().zip(q.probs()).any(|(&a, &b)| a > 0.0 && b == 0.0)
}

fn equal(p: &Histogram, q: &Histogram) -> bool {
    p.total_variation(q).map(|tv| tv <= EQUALITY_TOL).unwrap_or(false)
}

/// Rényi divergence `D_α(p‖q)` between histograms.
pub fn renyi_discrete(p: &Histogram, q: &Histogram, alpha: Alpha) -> Result<f64> {
    ensure_same_dim(p.len(), q.len())?;
    if equal(p, q) {
        return Ok(0.0);
    }
    match alpha {
        Alpha::Zero => Ok(nonneg(-q.mass_on_support_of(p)?.ln())),
        Alpha::One => kl_discrete(p, q),
        Alpha::Infinity => funk_metric(p, q),
        Alpha::Finite(order) => {
            let a = order.get();
            if a > 1.0 && support_violation(p, q) {
                return Ok(f64::INFINITY);
            }
            // 0^a = 0 for a > 0, and q_i = 0 terms vanish when a < 1.
            let lse = log_sum_exp(
                p.probs()
                    .iter()
                    .zip(q.probs())
                    .filter(|(&pi, &qi)| pi > 0.0 && qi > 0.0)
                    .map(|(&pi, &qi)| a * pi.ln() + (1.0 - a) * qi.ln()),
            );
            if lse == f64::NEG_INFINITY {
                // disjoint supports with a < 1
                return Ok(f64::INFINITY);
            }
            Ok(nonneg(lse / (a - 1.0)))
        }
    }
}

/// `KL(p‖q) = Σ p_i log(p_i/q_i)` with `0·log(0/q) = 0`.
pub fn kl_discrete(p: &Histogram, q: &Histogram) -> Result<f64> {
    ensure_same_dim(p.len(), q.len())?;
    if equal(p, q) {
        return Ok(0.0);
    }
    if support_violation(p, q) {
        return Ok(f64::INFINITY);
    }
    let kl = p
        .probs()
        .iter()
        .zip(q.probs())
        .filter(|(&pi, _)| pi > 0.0)
        .map(|(&pi, &qi)| pi * (pi.ln() - qi.ln()))
        .sum();
    Ok(nonneg(kl))
}

/// Funk weak metric on the simplex, `log max_i p_i/q_i`. Coincides with the
/// α → ∞ Rényi divergence.
pub fn funk_metric(p: &Histogram, q: &Histogram) -> Result<f64> {
    ensure_same_dim(p.len(), q.len())?;
    if equal(p, q) {
        return Ok(0.0);
    }
    if support_violation(p, q) {
        return Ok(f64::INFINITY);
    }
    let max = p
        .probs()
        .iter()
        .zip(q.probs())
        .filter(|(&pi, _)| pi > 0.0)
        .map(|(&pi, &qi)| pi.ln() - qi.ln())
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(nonneg(max))
}

/// Rényi divergence `D_α(P‖Q)` between multivariate Gaussians.
///
/// For finite α the closed form needs `αΣ_Q + (1-α)Σ_P` to be positive
/// definite; otherwise the integral diverges and
/// [`Error::DivergenceUndefined`] is returned. `Alpha::Zero` is always zero
/// since Gaussians share full support. `Alpha::Infinity` is the supremum of
/// the log density ratio, `+∞` when it is unbounded (including equal
/// covariances with different means).
pub fn renyi_gaussian(p: &GaussianParams, q: &GaussianParams, alpha: Alpha) -> Result<f64> {
    ensure_same_dim(p.dim(), q.dim())?;
    if p == q {
        return Ok(0.0);
    }
    match alpha {
        Alpha::Zero => Ok(0.0),
        Alpha::One => kl_gaussian(p, q),
        Alpha::Infinity => gaussian_max_log_ratio(p, q),
        Alpha::Finite(order) => {
            let a = order.get();
            let interp = q.cov() * a + p.cov() * (1.0 - a);
            let chol = cholesky(&interp).map_err(|_| {
                Error::DivergenceUndefined(format!(
                    "alpha*cov_Q + (1-alpha)*cov_P is not positive definite for alpha = {a}"
                ))
            })?;
            let diff = p.mean() - q.mean();
            let quad = diff.dot(&chol.solve(&diff));
            let log_ratio = log_det(&chol) - (1.0 - a) * p.log_det_cov() - a * q.log_det_cov();
            Ok(nonneg(0.5 * a * quad - log_ratio / (2.0 * (a - 1.0))))
        }
    }
}

/// `KL(P‖Q)` between multivariate Gaussians.
pub fn kl_gaussian(p: &GaussianParams, q: &GaussianParams) -> Result<f64> {
    ensure_same_dim(p.dim(), q.dim())?;
    if p == q {
        return Ok(0.0);
    }
    let chol_q = q.cholesky();
    let trace = chol_q.solve(p.cov()).trace();
    let diff = q.mean() - p.mean();
    let quad = diff.dot(&chol_q.solve(&diff));
    let d = p.dim() as f64;
    Ok(nonneg(0.5 * (trace + quad - d + log_det(&chol_q) - p.log_det_cov())))
}

/// `sup_x log p(x)/q(x)` for Gaussians.
fn gaussian_max_log_ratio(p: &GaussianParams, q: &GaussianParams) -> Result<f64> {
    let prec_p = p.cholesky().inverse();
    let prec_q = q.cholesky().inverse();
    // log p/q = -½ xᵀMx + bᵀx + c
    let m: DMatrix<f64> = &prec_p - &prec_q;
    let m = (&m + m.transpose()) * 0.5;
    let b = &prec_p * p.mean() - &prec_q * q.mean();
    let c = -0.5 * p.mean().dot(&(&prec_p * p.mean())) + 0.5 * q.mean().dot(&(&prec_q * q.mean()))
        + 0.5 * (q.log_det_cov() - p.log_det_cov());

    let scale = prec_p.amax().max(prec_q.amax());
    let eig_tol = 1e-12 * scale;
    let lin_tol = 1e-12 * scale * (1.0 + p.mean().amax() + q.mean().amax());
    let eig = SymmetricEigen::new(m);
    let b_rot = eig.eigenvectors.transpose() * b;
    let mut sup = c;
    for (&lam, &bj) in eig.eigenvalues.iter().zip(b_rot.iter()) {
        if lam < -eig_tol {
            return Ok(f64::INFINITY);
        }
        if lam <= eig_tol {
            if bj.abs() > lin_tol {
                return Ok(f64::INFINITY);
            }
        } else {
            sup += bj * bj / (2.0 * lam);
        }
    }
    Ok(nonneg(sup))
}

/// `KL(P(·|θ)‖P(·|θ'))` within an exponential family, computed as the Bregman
/// divergence `A(θ') - A(θ) - ∇A(θ)ᵀ(θ' - θ)` of the log-partition.
pub fn bregman_kl<F: ExponentialFamily + ?Sized>(
    theta: &NaturalParams,
    theta_prime: &NaturalParams,
    fam: &F,
) -> Result<f64> {
    ensure_same_dim(fam.param_dim(), theta.len())?;
    ensure_same_dim(fam.param_dim(), theta_prime.len())?;
    if theta == theta_prime {
        return Ok(0.0);
    }
    let grad = fam.grad_log_partition(theta)?;
    let inner: f64 = grad
        .as_slice()
        .iter()
        .zip(theta_prime.as_slice().iter().zip(theta.as_slice()))
        .map(|(g, (t1, t0))| g * (t1 - t0))
        .sum();
    Ok(nonneg(fam.log_partition(theta_prime)? - fam.log_partition(theta)? - inner))
}
