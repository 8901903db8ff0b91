//! KL frontiers inside an exponential family.
//!
//! Between members `θ_P` and `θ_Q` of a family with log-partition `A`, the
//! exclusive KL frontier is traced by the natural-parameter segment
//! `γ(λ) = λθ_P + (1-λ)θ_Q` and the inclusive one by the moment-parameter
//! segment `γ(λ) = (∇A)⁻¹(λ∇A(θ_P) + (1-λ)∇A(θ_Q))`. Every KL value on the
//! curve is a Bregman divergence of `A`.
//!
//! Note the parameter runs from `Q` (λ = 0) to `P` (λ = 1) here. Curves
//! returned by [`frontier_kl`] store `1 - λ` instead, so that `lambda = 0`
//! is the `R = P` end as for histogram frontiers.

use serde::Serialize;

use crate::alpha::Alpha;
use crate::divergence::{bregman_kl, kl_gaussian};
use crate::error::{ensure_same_dim, Error, Result};
use crate::family::{gaussian_to_natural, ExponentialFamily, GaussianFamily, NaturalParams};
use crate::frontier::{FrontierCurve, FrontierPoint, FrontierSide};
use crate::gaussian::GaussianParams;
use crate::par::{map_slice, Execution};

/// Point on the exponential-family KL barycenter path; `λ = 1` gives
/// `θ_P` and `λ = 0` gives `θ_Q`.
pub fn expfam_curve_point<F: ExponentialFamily + ?Sized>(
    theta_p: &NaturalParams,
    theta_q: &NaturalParams,
    side: FrontierSide,
    lambda: f64,
    fam: &F,
) -> Result<NaturalParams> {
    ensure_same_dim(fam.param_dim(), theta_p.len())?;
    ensure_same_dim(fam.param_dim(), theta_q.len())?;
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::Domain(format!("lambda = {lambda} outside [0, 1]")));
    }
    fam.log_partition(theta_p)?;
    fam.log_partition(theta_q)?;
    if lambda == 1.0 {
        return Ok(theta_p.clone());
    }
    if lambda == 0.0 {
        return Ok(theta_q.clone());
    }
    let theta = match side {
        FrontierSide::Exclusive => theta_p.lerp(theta_q, lambda),
        FrontierSide::Inclusive => {
            let eta_p = fam.grad_log_partition(theta_p)?;
            let eta_q = fam.grad_log_partition(theta_q)?;
            fam.inv_grad_log_partition(&eta_p.lerp(&eta_q, lambda))?
        }
    };
    assert!(
        fam.log_partition(&theta).is_ok(),
        "interpolated parameter left the natural domain"
    );
    Ok(theta)
}

/// KL frontier between two members of `fam`, sampled at `grid_size` values.
pub fn frontier_kl_family<F: ExponentialFamily + Sync + ?Sized>(
    theta_p: &NaturalParams,
    theta_q: &NaturalParams,
    side: FrontierSide,
    grid_size: usize,
    fam: &F,
    exec: Execution,
) -> Result<FrontierCurve> {
    if grid_size < 2 {
        return Err(Error::InvalidParameter(format!("grid size must be at least 2, got {grid_size}")));
    }
    let n = grid_size - 1;
    let grid: Vec<f64> = (0..=n).map(|k| if k == n { 1.0 } else { k as f64 / n as f64 }).collect();
    let evaluated = map_slice(exec, &grid, |&t| {
        // t is the stored orientation: t = 0 is R = P.
        let gamma = expfam_curve_point(theta_p, theta_q, side, 1.0 - t, fam)?;
        let (to_p, to_q) = match side {
            FrontierSide::Exclusive => (bregman_kl(&gamma, theta_p, fam)?, bregman_kl(&gamma, theta_q, fam)?),
            FrontierSide::Inclusive => (bregman_kl(theta_p, &gamma, fam)?, bregman_kl(theta_q, &gamma, fam)?),
        };
        Ok(FrontierPoint { lambda: t, loss_recall: to_p, loss_precision: to_q })
    });
    let points = evaluated.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(FrontierCurve::from_points(points, side, Alpha::One))
}

/// KL frontier between two Gaussians.
pub fn frontier_kl(p: &GaussianParams, q: &GaussianParams, side: FrontierSide, grid_size: usize) -> Result<FrontierCurve> {
    frontier_kl_with(p, q, side, grid_size, Execution::default())
}

pub fn frontier_kl_with(
    p: &GaussianParams,
    q: &GaussianParams,
    side: FrontierSide,
    grid_size: usize,
    exec: Execution,
) -> Result<FrontierCurve> {
    ensure_same_dim(p.dim(), q.dim())?;
    let fam = GaussianFamily::new(p.dim());
    frontier_kl_family(&gaussian_to_natural(p), &gaussian_to_natural(q), side, grid_size, &fam, exec)
}

/// Gaussian frontier for an arbitrary order. Only `α = 1` has a closed form.
pub fn frontier_gaussian(
    p: &GaussianParams,
    q: &GaussianParams,
    alpha: Alpha,
    side: FrontierSide,
    grid_size: usize,
) -> Result<FrontierCurve> {
    match alpha {
        Alpha::One => frontier_kl(p, q, side, grid_size),
        other => Err(Error::Unsupported(format!(
            "Gaussian frontiers are only available for alpha = 1, got {other}"
        ))),
    }
}

/// KL divergences at the two ends of the frontier.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KlEndpoints {
    /// `KL(Q‖P)`, large when `Q` puts mass where `P` has little.
    pub precision_loss: f64,
    /// `KL(P‖Q)`, large when `Q` misses mass of `P`.
    pub recall_loss: f64,
}

pub fn kl_endpoints(p: &GaussianParams, q: &GaussianParams) -> Result<KlEndpoints> {
    Ok(KlEndpoints { precision_loss: kl_gaussian(q, p)?, recall_loss: kl_gaussian(p, q)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{natural_to_gaussian, BernoulliFamily};

    fn g(mean: f64, var: f64) -> GaussianParams {
        GaussianParams::univariate(mean, var).unwrap()
    }

    fn nat(mean: f64, var: f64) -> NaturalParams {
        gaussian_to_natural(&g(mean, var))
    }

    #[test]
    fn endpoints_are_exact() {
        let fam = GaussianFamily::new(1);
        let (tp, tq) = (nat(0.0, 1.0), nat(2.0, 3.0));
        for side in [FrontierSide::Exclusive, FrontierSide::Inclusive] {
            assert_eq!(expfam_curve_point(&tp, &tq, side, 1.0, &fam).unwrap(), tp);
            assert_eq!(expfam_curve_point(&tp, &tq, side, 0.0, &fam).unwrap(), tq);
        }
    }

    #[test]
    fn midpoints() {
        let fam = GaussianFamily::new(1);
        let mid = expfam_curve_point(&nat(0.0, 1.0), &nat(2.0, 1.0), FrontierSide::Exclusive, 0.5, &fam).unwrap();
        let r = natural_to_gaussian(&mid, 1).unwrap();
        assert!((r.mean()[0] - 1.0).abs() < 1e-15 && (r.cov()[(0, 0)] - 1.0).abs() < 1e-15);
        let mid = expfam_curve_point(&nat(0.0, 1.0), &nat(0.0, 4.0), FrontierSide::Inclusive, 0.5, &fam).unwrap();
        let r = natural_to_gaussian(&mid, 1).unwrap();
        assert!(r.mean()[0].abs() < 1e-15 && (r.cov()[(0, 0)] - 2.5).abs() < 1e-12);
    }

    #[test]
    fn identical_inputs_collapse() {
        for side in [FrontierSide::Exclusive, FrontierSide::Inclusive] {
            let c = frontier_kl(&g(0.3, 2.0), &g(0.3, 2.0), side, 21).unwrap();
            assert_eq!(c.pairs(), vec![(0.0, 0.0)]);
        }
    }

    #[test]
    fn equal_variance_endpoints() {
        for side in [FrontierSide::Exclusive, FrontierSide::Inclusive] {
            let c = frontier_kl(&g(0.0, 1.0), &g(1.0, 1.0), side, 51).unwrap();
            let (first, last) = (c.points[0], *c.points.last().unwrap());
            assert_eq!(first.lambda, 0.0);
            assert_eq!(last.lambda, 1.0);
            assert!((first.loss_precision - 0.5).abs() < 1e-9 && first.loss_recall == 0.0);
            assert!((last.loss_recall - 0.5).abs() < 1e-9 && last.loss_precision == 0.0);
        }
    }

    #[test]
    fn endpoints_and_unsupported_orders() {
        let e = kl_endpoints(&g(0.0, 1.0), &g(0.0, 0.25)).unwrap();
        assert!((e.precision_loss - 0.5 * (0.25 - 1.0 - 0.25f64.ln())).abs() < 1e-12);
        assert!((e.recall_loss - 0.5 * (4.0 - 1.0 - 4f64.ln())).abs() < 1e-12);
        assert!(e.precision_loss < e.recall_loss);
        let e = kl_endpoints(&g(0.0, 1.0), &g(0.0, 4.0)).unwrap();
        assert!(e.precision_loss > e.recall_loss);
        assert_eq!(kl_endpoints(&g(1.0, 2.0), &g(1.0, 2.0)).unwrap(), KlEndpoints { precision_loss: 0.0, recall_loss: 0.0 });
        let err = frontier_gaussian(&g(0.0, 1.0), &g(1.0, 1.0), Alpha::new(2.0).unwrap(), FrontierSide::Exclusive, 11);
        assert!(matches!(err, Err(Error::Unsupported(_))));
    }

    #[test]
    fn bernoulli_frontier_runs() {
        let (tp, tq) = (NaturalParams::new(vec![0.0]), NaturalParams::new(vec![3f64.ln()]));
        let fam = BernoulliFamily;
        for side in [FrontierSide::Exclusive, FrontierSide::Inclusive] {
            let c = frontier_kl_family(&tp, &tq, side, 11, &fam, Execution::Sequential).unwrap();
            assert_eq!(c.points.len(), 11);
        }
        let mid = expfam_curve_point(&tp, &tq, FrontierSide::Inclusive, 0.5, &fam).unwrap();
        // moment midpoint of 0.5 and 0.75
        assert!((mid.as_slice()[0] - (0.625f64 / 0.375).ln()).abs() < 1e-14);
    }
}
