//! Divergence frontiers between histograms.
//!
//! The exclusive frontier collects the Pareto-minimal pairs
//! `(D_α(r‖p), D_α(r‖q))` over all `r` in the simplex, the inclusive frontier
//! the pairs `(D_α(p‖r), D_α(q‖r))`. Both are traced by closed-form
//! barycentric paths `γ(λ)` from `p` (λ = 0) to `q` (λ = 1):
//!
//! | side      | finite α                                   | α = 1              |
//! |-----------|--------------------------------------------|--------------------|
//! | exclusive | `(λ q^{1-α} + (1-λ) p^{1-α})^{1/(1-α)}`    | `q^λ p^{1-λ}`      |
//! | inclusive | `(λ q^α + (1-λ) p^α)^{1/α}`                | `λ q + (1-λ) p`    |
//!
//! For α = ∞ the exclusive path is the Funk geodesic `γ(λ) ∝ min(p, q/λ)`
//! with `λ` ranging over the likelihood ratios `q_i/p_i`; mapping its
//! frontier through `x ↦ e^{-x}` yields the maximal precision-recall pairs
//! of the mixture-based PRD construction.
//!
//! Coordinates are emitted as `(loss_recall, loss_precision)`, i.e. the
//! divergence involving `p` first.

use serde::Serialize;

use crate::alpha::Alpha;
use crate::divergence::{log_sum_exp, renyi_discrete};
use crate::error::{ensure_same_dim, Error, Result};
use crate::extended_float;
use crate::histogram::Histogram;
use crate::par::{map_slice, Execution};
use crate::pareto::pareto_filter_by;

pub const DEFAULT_GRID_SIZE: usize = 201;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FrontierSide {
    /// Auxiliary distribution in the first divergence argument.
    Exclusive,
    /// Auxiliary distribution in the second divergence argument.
    Inclusive,
}

impl std::str::FromStr for FrontierSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exclusive" => Ok(FrontierSide::Exclusive),
            "inclusive" => Ok(FrontierSide::Inclusive),
            other => Err(Error::InvalidParameter(format!("unknown frontier side {other:?}"))),
        }
    }
}

impl std::fmt::Display for FrontierSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FrontierSide::Exclusive => "exclusive",
            FrontierSide::Inclusive => "inclusive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrontierPoint {
    #[serde(with = "extended_float")]
    pub lambda: f64,
    /// Divergence between the auxiliary distribution and `P`.
    #[serde(with = "extended_float")]
    pub loss_recall: f64,
    /// Divergence between the auxiliary distribution and `Q`.
    #[serde(with = "extended_float")]
    pub loss_precision: f64,
}

impl FrontierPoint {
    pub fn pair(&self) -> (f64, f64) {
        (self.loss_recall, self.loss_precision)
    }
}

/// Pareto-filtered frontier, ordered by `lambda`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrontierCurve {
    pub points: Vec<FrontierPoint>,
    pub side: FrontierSide,
    pub alpha: Alpha,
}

impl FrontierCurve {
    /// Pareto-filters `points` and orders the survivors by `lambda`.
    pub fn from_points(points: Vec<FrontierPoint>, side: FrontierSide, alpha: Alpha) -> Self {
        let mut points = pareto_filter_by(points, FrontierPoint::pair);
        points.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
        FrontierCurve { points, side, alpha }
    }

    pub fn pairs(&self) -> Vec<(f64, f64)> {
        self.points.iter().map(FrontierPoint::pair).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PrdPoint {
    pub recall: f64,
    pub precision: f64,
}

/// Maximal precision-recall pairs, ordered by ascending recall.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrdCurve {
    pub points: Vec<PrdPoint>,
}

impl PrdCurve {
    /// Keeps the Pareto-maximal points. An empty input becomes `{(0, 0)}`.
    pub fn from_points(points: Vec<PrdPoint>) -> Self {
        let mut points = pareto_filter_by(points, |p| (-p.recall, -p.precision));
        if points.is_empty() {
            points.push(PrdPoint { recall: 0.0, precision: 0.0 });
        }
        points.sort_by(|a, b| a.recall.total_cmp(&b.recall).then(a.precision.total_cmp(&b.precision)));
        PrdCurve { points }
    }

    pub fn contains(&self, recall: f64, precision: f64, tol: f64) -> bool {
        self.points
            .iter()
            .any(|p| (p.recall - recall).abs() <= tol && (p.precision - precision).abs() <= tol)
    }

    pub fn max_precision(&self) -> f64 {
        self.points.iter().map(|p| p.precision).fold(0.0, f64::max)
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if (0.0..=1.0).contains(&lambda) {
        Ok(())
    } else {
        Err(Error::Domain(format!("lambda = {lambda} outside [0, 1]")))
    }
}

fn dispatch_error(alpha: Alpha) -> Error {
    Error::Unsupported(format!(
        "barycentric curve for alpha = {alpha}; use infinity_geodesic_point for alpha = inf"
    ))
}

/// Point `γ(λ)` on the exclusive barycentric path.
///
/// For α > 1 a zero in either `p_i` or `q_i` forces `γ(λ)_i = 0` on the open
/// interval, the limit of the closed form. When that leaves no mass at all
/// (disjoint supports) there is no interior point and a domain error is
/// returned. `Alpha::One` delegates to [`kl_curve_point`].
pub fn exclusive_curve_point(p: &Histogram, q: &Histogram, alpha: Alpha, lambda: f64) -> Result<Histogram> {
    ensure_same_dim(p.len(), q.len())?;
    check_lambda(lambda)?;
    let a = match alpha {
        Alpha::Finite(o) => o.get(),
        Alpha::One => return kl_curve_point(p, q, FrontierSide::Exclusive, lambda),
        other => return Err(dispatch_error(other)),
    };
    if lambda == 0.0 {
        return Ok(p.clone());
    }
    if lambda == 1.0 {
        return Ok(q.clone());
    }
    let e = 1.0 - a;
    let (ll, lr) = (lambda.ln(), (1.0 - lambda).ln());
    let logw: Vec<f64> = p
        .probs()
        .iter()
        .zip(q.probs())
        .map(|(&pi, &qi)| {
            if e < 0.0 && (pi == 0.0 || qi == 0.0) {
                f64::NEG_INFINITY
            } else {
                log_sum_exp([ll + e * qi.ln(), lr + e * pi.ln()]) / e
            }
        })
        .collect();
    Histogram::from_log_weights(&logw)
}

/// Point `γ(λ)` on the inclusive barycentric path. `Alpha::One` delegates to
/// [`kl_curve_point`].
pub fn inclusive_curve_point(p: &Histogram, q: &Histogram, alpha: Alpha, lambda: f64) -> Result<Histogram> {
    ensure_same_dim(p.len(), q.len())?;
    check_lambda(lambda)?;
    let a = match alpha {
        Alpha::Finite(o) => o.get(),
        Alpha::One => return kl_curve_point(p, q, FrontierSide::Inclusive, lambda),
        other => return Err(dispatch_error(other)),
    };
    if lambda == 0.0 {
        return Ok(p.clone());
    }
    if lambda == 1.0 {
        return Ok(q.clone());
    }
    let (ll, lr) = (lambda.ln(), (1.0 - lambda).ln());
    let logw: Vec<f64> = p
        .probs()
        .iter()
        .zip(q.probs())
        .map(|(&pi, &qi)| log_sum_exp([ll + a * qi.ln(), lr + a * pi.ln()]) / a)
        .collect();
    Histogram::from_log_weights(&logw)
}

/// KL barycenters: normalized geometric mixture `q^λ p^{1-λ}` (exclusive)
/// or arithmetic mixture `λq + (1-λ)p` (inclusive).
pub fn kl_curve_point(p: &Histogram, q: &Histogram, side: FrontierSide, lambda: f64) -> Result<Histogram> {
    ensure_same_dim(p.len(), q.len())?;
    check_lambda(lambda)?;
    if lambda == 0.0 {
        return Ok(p.clone());
    }
    if lambda == 1.0 {
        return Ok(q.clone());
    }
    let pq = p.probs().iter().zip(q.probs());
    match side {
        FrontierSide::Exclusive => {
            let logw: Vec<f64> = pq.map(|(&pi, &qi)| lambda * qi.ln() + (1.0 - lambda) * pi.ln()).collect();
            Histogram::from_log_weights(&logw)
        }
        FrontierSide::Inclusive => Histogram::new(pq.map(|(&pi, &qi)| lambda * qi + (1.0 - lambda) * pi).collect()),
    }
}

/// `[min_i q_i/p_i, max_i q_i/p_i]` over the indices with `p_i > 0`.
pub fn infinity_domain(p: &Histogram, q: &Histogram) -> Result<(f64, f64)> {
    ensure_same_dim(p.len(), q.len())?;
    Ok(ratio_range(p, q, |pi, _| pi > 0.0).expect("a histogram has positive mass somewhere"))
}

fn ratio_range(p: &Histogram, q: &Histogram, keep: impl Fn(f64, f64) -> bool) -> Option<(f64, f64)> {
    p.probs()
        .iter()
        .zip(q.probs())
        .filter(|(&pi, &qi)| keep(pi, qi))
        .map(|(&pi, &qi)| qi / pi)
        .fold(None, |acc, r| match acc {
            None => Some((r, r)),
            Some((lo, hi)) => Some((lo.min(r), hi.max(r))),
        })
}

fn geodesic_formula(p: &Histogram, q: &Histogram, lambda: f64) -> Result<Histogram> {
    Histogram::new(p.probs().iter().zip(q.probs()).map(|(&pi, &qi)| pi.min(qi / lambda)).collect())
}

/// Point on the Funk geodesic `γ(λ) ∝ min(p_i, q_i/λ)` between `p` and `q`.
///
/// `λ` must lie in [`infinity_domain`]; its lower end returns `p` and its
/// upper end returns `q`.
pub fn infinity_geodesic_point(p: &Histogram, q: &Histogram, lambda: f64) -> Result<Histogram> {
    let (lo, hi) = infinity_domain(p, q)?;
    if !(lo..=hi).contains(&lambda) {
        return Err(Error::Domain(format!("lambda = {lambda} outside [{lo}, {hi}]")));
    }
    if lambda == lo {
        Ok(p.clone())
    } else if lambda == hi {
        Ok(q.clone())
    } else {
        geodesic_formula(p, q, lambda)
    }
}

/// Log-uniform grid of geodesic parameters over the likelihood ratios on the
/// common support of `p` and `q`. Empty when the supports are disjoint.
pub fn infinity_lambda_grid(p: &Histogram, q: &Histogram, grid_size: usize) -> Result<Vec<f64>> {
    ensure_same_dim(p.len(), q.len())?;
    let Some((lo, hi)) = ratio_range(p, q, |pi, qi| pi > 0.0 && qi > 0.0) else {
        return Ok(Vec::new());
    };
    if lo == hi || grid_size < 2 {
        return Ok(vec![lo]);
    }
    let (llo, lhi) = (lo.ln(), hi.ln());
    let n = grid_size - 1;
    Ok((0..=n)
        .map(|k| match k {
            0 => lo,
            k if k == n => hi,
            k => (llo + (lhi - llo) * k as f64 / n as f64).exp(),
        })
        .collect())
}

fn uniform_lambda_grid(grid_size: usize) -> Vec<f64> {
    let n = grid_size - 1;
    (0..=n).map(|k| if k == n { 1.0 } else { k as f64 / n as f64 }).collect()
}

fn divergence_pair(p: &Histogram, q: &Histogram, r: &Histogram, alpha: Alpha, side: FrontierSide) -> Result<(f64, f64)> {
    Ok(match side {
        FrontierSide::Exclusive => (renyi_discrete(r, p, alpha)?, renyi_discrete(r, q, alpha)?),
        FrontierSide::Inclusive => (renyi_discrete(p, r, alpha)?, renyi_discrete(q, r, alpha)?),
    })
}

/// Frontier for histograms, sampled at `grid_size` values of `λ`.
pub fn frontier(p: &Histogram, q: &Histogram, alpha: Alpha, side: FrontierSide, grid_size: usize) -> Result<FrontierCurve> {
    frontier_with(p, q, alpha, side, grid_size, Execution::default())
}

pub fn frontier_with(
    p: &Histogram,
    q: &Histogram,
    alpha: Alpha,
    side: FrontierSide,
    grid_size: usize,
    exec: Execution,
) -> Result<FrontierCurve> {
    ensure_same_dim(p.len(), q.len())?;
    if grid_size < 2 {
        return Err(Error::InvalidParameter(format!("grid size must be at least 2, got {grid_size}")));
    }
    let candidates: Vec<(f64, Histogram)> = match (alpha, side) {
        (Alpha::Zero, _) => {
            return Err(Error::Unsupported(
                "alpha = 0 frontiers degenerate to support overlap; use the k-NN support estimator".into(),
            ))
        }
        (Alpha::Infinity, FrontierSide::Inclusive) => {
            return Err(Error::Unsupported("inclusive frontier for alpha = inf".into()))
        }
        (Alpha::Infinity, FrontierSide::Exclusive) => infinity_candidates(p, q, grid_size, exec)?,
        (_, side) => {
            let grid = uniform_lambda_grid(grid_size);
            let points = map_slice(exec, &grid, |&lambda| {
                let r = match side {
                    FrontierSide::Exclusive => exclusive_curve_point(p, q, alpha, lambda),
                    FrontierSide::Inclusive => inclusive_curve_point(p, q, alpha, lambda),
                };
                (lambda, r)
            });
            let mut out = Vec::with_capacity(points.len());
            for (lambda, r) in points {
                match r {
                    Ok(r) => out.push((lambda, r)),
                    // interior point with empty support
                    Err(Error::Domain(_)) => {}
                    Err(e) => return Err(e),
                }
            }
            out
        }
    };
    let evaluated = map_slice(exec, &candidates, |(lambda, r)| {
        divergence_pair(p, q, r, alpha, side).map(|(a, b)| FrontierPoint { lambda: *lambda, loss_recall: a, loss_precision: b })
    });
    let points = evaluated.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(FrontierCurve::from_points(points, side, alpha))
}

fn infinity_candidates(p: &Histogram, q: &Histogram, grid_size: usize, exec: Execution) -> Result<Vec<(f64, Histogram)>> {
    let (lo, hi) = infinity_domain(p, q)?;
    let grid = infinity_lambda_grid(p, q, grid_size)?;
    let interior = map_slice(exec, &grid, |&lambda| geodesic_formula(p, q, lambda).map(|r| (lambda, r)));
    let mut out = interior.into_iter().collect::<Result<Vec<_>>>()?;
    // The geodesic stays on the common support; add the endpoints it cannot reach.
    let common = |a: f64, b: f64| a > 0.0 && b > 0.0;
    let reaches = |h: &Histogram| {
        h.probs().iter().zip(p.probs().iter().zip(q.probs())).all(|(&x, (&pi, &qi))| x == 0.0 || common(pi, qi))
    };
    if !reaches(p) {
        out.insert(0, (lo, p.clone()));
    }
    if !reaches(q) {
        out.push((hi, q.clone()));
    }
    Ok(out)
}

/// Maps an exclusive α = ∞ frontier to precision-recall pairs
/// `(recall, precision) = (e^{-loss_recall}, e^{-loss_precision})`. Points
/// with an infinite coordinate map to the origin.
pub fn prd_from_infinity_frontier(curve: &FrontierCurve) -> Result<PrdCurve> {
    if curve.alpha != Alpha::Infinity || curve.side != FrontierSide::Exclusive {
        return Err(Error::InvalidParameter(format!(
            "PRD requires an exclusive alpha = inf frontier, got {} alpha = {}",
            curve.side, curve.alpha
        )));
    }
    let points = curve
        .points
        .iter()
        .map(|pt| {
            if pt.loss_recall.is_finite() && pt.loss_precision.is_finite() {
                PrdPoint { recall: (-pt.loss_recall).exp(), precision: (-pt.loss_precision).exp() }
            } else {
                PrdPoint { recall: 0.0, precision: 0.0 }
            }
        })
        .collect();
    Ok(PrdCurve::from_points(points))
}

/// Reference PRD curve from the mixture definition: for each ratio `λ` the
/// largest `π, ρ` with `π·r ≤ q` and `ρ·r ≤ p` for a common component `r`
/// are `π = Σ min(λ p_i, q_i)` and `ρ = Σ min(p_i, q_i/λ)`.
///
/// Sampled on the same `λ` grid as the α = ∞ frontier so the two can be
/// compared pointwise.
pub fn prd_reference(p: &Histogram, q: &Histogram, grid_size: usize) -> Result<PrdCurve> {
    let grid = infinity_lambda_grid(p, q, grid_size)?;
    let points = grid
        .iter()
        .map(|&lambda| {
            let (mut precision, mut recall) = (0.0, 0.0);
            for (&pi, &qi) in p.probs().iter().zip(q.probs()) {
                precision += (lambda * pi).min(qi);
                recall += pi.min(qi / lambda);
            }
            PrdPoint { recall, precision }
        })
        .collect();
    Ok(PrdCurve::from_points(points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divergence::funk_metric;

    fn h(v: &[f64]) -> Histogram {
        Histogram::new(v.to_vec()).unwrap()
    }

    fn close(a: &Histogram, b: &[f64], tol: f64) -> bool {
        a.probs().iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    fn two() -> Alpha {
        Alpha::new(2.0).unwrap()
    }

    #[test]
    fn endpoints_are_exact() {
        let p = h(&[0.2, 0.3, 0.5]);
        let q = h(&[0.6, 0.1, 0.3]);
        for alpha in [Alpha::new(0.5).unwrap(), Alpha::One, two()] {
            for f in [exclusive_curve_point, inclusive_curve_point] {
                assert_eq!(f(&p, &q, alpha, 0.0).unwrap(), p);
                assert_eq!(f(&p, &q, alpha, 1.0).unwrap(), q);
            }
        }
    }

    #[test]
    fn exclusive_harmonic_example() {
        let p = h(&[0.5, 0.5]);
        let q = h(&[0.25, 0.75]);
        // (0.5/q_i + 0.5/p_i)^{-1} = (1/3, 3/5) → (5/14, 9/14)
        let r = exclusive_curve_point(&p, &q, two(), 0.5).unwrap();
        assert!(close(&r, &[5.0 / 14.0, 9.0 / 14.0], 1e-15));
    }

    #[test]
    fn inclusive_examples() {
        let p = h(&[0.5, 0.5]);
        let q = h(&[0.25, 0.75]);
        let r = inclusive_curve_point(&p, &q, Alpha::One, 0.5).unwrap();
        assert!(close(&r, &[0.375, 0.625], 1e-15));
        let r = inclusive_curve_point(&p, &q, two(), 0.5).unwrap();
        let w = [(0.5f64 * 0.0625 + 0.5 * 0.25).sqrt(), (0.5f64 * 0.5625 + 0.5 * 0.25).sqrt()];
        let s = w[0] + w[1];
        assert!(close(&r, &[w[0] / s, w[1] / s], 1e-15));
    }

    #[test]
    fn geometric_mixture_example() {
        let p = h(&[0.5, 0.5]);
        let q = h(&[0.25, 0.75]);
        let r = kl_curve_point(&p, &q, FrontierSide::Exclusive, 0.5).unwrap();
        let w = [0.125f64.sqrt(), 0.375f64.sqrt()];
        let s = w[0] + w[1];
        assert!(close(&r, &[w[0] / s, w[1] / s], 1e-15));
        assert!((r.probs()[0] - 0.3660).abs() < 1e-4);
    }

    #[test]
    fn dispatch_and_domain_errors() {
        let p = h(&[0.5, 0.5]);
        let q = h(&[0.25, 0.75]);
        assert!(matches!(exclusive_curve_point(&p, &q, Alpha::Infinity, 0.5), Err(Error::Unsupported(_))));
        assert!(matches!(inclusive_curve_point(&p, &q, Alpha::Zero, 0.5), Err(Error::Unsupported(_))));
        assert!(matches!(exclusive_curve_point(&p, &q, two(), 1.5), Err(Error::Domain(_))));
        assert!(matches!(frontier(&p, &q, Alpha::Zero, FrontierSide::Exclusive, 10), Err(Error::Unsupported(_))));
        assert!(matches!(frontier(&p, &q, two(), FrontierSide::Exclusive, 1), Err(Error::InvalidParameter(_))));
        assert!(matches!(infinity_geodesic_point(&p, &q, 0.1), Err(Error::Domain(_))));
    }

    #[test]
    fn zero_entries_with_large_order() {
        let p = h(&[0.5, 0.5, 0.0]);
        let q = h(&[0.0, 0.5, 0.5]);
        let r = exclusive_curve_point(&p, &q, two(), 0.3).unwrap();
        assert_eq!(r.probs(), &[0.0, 1.0, 0.0]);
        let disjoint_p = h(&[1.0, 0.0]);
        let disjoint_q = h(&[0.0, 1.0]);
        assert!(matches!(exclusive_curve_point(&disjoint_p, &disjoint_q, two(), 0.5), Err(Error::Domain(_))));
    }

    #[test]
    fn geodesic_examples() {
        let p = h(&[0.5, 0.5]);
        let q = h(&[0.25, 0.75]);
        let (lo, hi) = infinity_domain(&p, &q).unwrap();
        assert_eq!((lo, hi), (0.5, 1.5));
        assert_eq!(infinity_geodesic_point(&p, &q, lo).unwrap(), p);
        assert_eq!(infinity_geodesic_point(&p, &q, hi).unwrap(), q);
        let mid = infinity_geodesic_point(&p, &q, 1.0).unwrap();
        assert!(close(&mid, &[1.0 / 3.0, 2.0 / 3.0], 1e-15));
        // the formula itself reaches the endpoints on a common support
        assert!(close(&geodesic_formula(&p, &q, lo).unwrap(), p.probs(), 1e-15));
        assert!(close(&geodesic_formula(&p, &q, hi).unwrap(), q.probs(), 1e-15));
    }

    #[test]
    fn geodesity() {
        let p = h(&[0.1, 0.2, 0.3, 0.4]);
        let q = h(&[0.4, 0.1, 0.1, 0.4]);
        let total = funk_metric(&p, &q).unwrap();
        for lambda in infinity_lambda_grid(&p, &q, 51).unwrap() {
            let g = infinity_geodesic_point(&p, &q, lambda).unwrap();
            let split = funk_metric(&p, &g).unwrap() + funk_metric(&g, &q).unwrap();
            assert!((total - split).abs() <= 1e-12, "lambda {lambda}");
        }
    }

    #[test]
    fn identical_inputs_collapse() {
        let p = h(&[0.2, 0.3, 0.5]);
        for (alpha, side) in [
            (two(), FrontierSide::Exclusive),
            (Alpha::new(0.5).unwrap(), FrontierSide::Inclusive),
            (Alpha::One, FrontierSide::Exclusive),
            (Alpha::Infinity, FrontierSide::Exclusive),
        ] {
            let c = frontier(&p, &p, alpha, side, 21).unwrap();
            assert_eq!(c.pairs(), vec![(0.0, 0.0)], "{alpha} {side}");
        }
    }

    #[test]
    fn disjoint_supports() {
        let p = h(&[0.5, 0.5, 0.0, 0.0]);
        let q = h(&[0.0, 0.0, 0.5, 0.5]);
        for alpha in [Alpha::One, two(), Alpha::Infinity] {
            let c = frontier(&p, &q, alpha, FrontierSide::Exclusive, 11).unwrap();
            assert!(c.points.iter().all(|pt| pt.loss_recall.is_infinite() || pt.loss_precision.is_infinite()));
            assert_eq!(c.pairs(), vec![(0.0, f64::INFINITY), (f64::INFINITY, 0.0)]);
        }
        let prd = prd_from_infinity_frontier(&frontier(&p, &q, Alpha::Infinity, FrontierSide::Exclusive, 11).unwrap()).unwrap();
        assert_eq!(prd.points, vec![PrdPoint { recall: 0.0, precision: 0.0 }]);
        assert_eq!(prd_reference(&p, &q, 11).unwrap(), prd);
    }

    #[test]
    fn endpoints_present() {
        let p = h(&[0.1, 0.6, 0.3]);
        let q = h(&[0.5, 0.2, 0.3]);
        for alpha in [Alpha::new(0.5).unwrap(), Alpha::One, two()] {
            for side in [FrontierSide::Exclusive, FrontierSide::Inclusive] {
                let c = frontier(&p, &q, alpha, side, 31).unwrap();
                let first = c.points.first().unwrap();
                let last = c.points.last().unwrap();
                let (pq, qp) = (renyi_discrete(&p, &q, alpha).unwrap(), renyi_discrete(&q, &p, alpha).unwrap());
                let (start, end) = match side {
                    FrontierSide::Exclusive => ((0.0, pq), (qp, 0.0)),
                    FrontierSide::Inclusive => ((0.0, qp), (pq, 0.0)),
                };
                assert!((first.loss_recall - start.0).abs() < 1e-9 && (first.loss_precision - start.1).abs() < 1e-9);
                assert!((last.loss_recall - end.0).abs() < 1e-9 && (last.loss_precision - end.1).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn prd_matches_reference_on_example() {
        let p = h(&[0.5, 0.5]);
        let q = h(&[0.25, 0.75]);
        let c = frontier(&p, &q, Alpha::Infinity, FrontierSide::Exclusive, 41).unwrap();
        let a = prd_from_infinity_frontier(&c).unwrap();
        let b = prd_reference(&p, &q, 41).unwrap();
        assert_eq!(a.points.len(), b.points.len());
        for (x, y) in a.points.iter().zip(&b.points) {
            assert!((x.recall - y.recall).abs() <= 1e-9 && (x.precision - y.precision).abs() <= 1e-9);
        }
        assert!(prd_from_infinity_frontier(&frontier(&p, &q, two(), FrontierSide::Exclusive, 5).unwrap()).is_err());
    }

    #[test]
    fn subset_support_reaches_full_precision() {
        let p = Histogram::uniform(10).unwrap();
        let q = h(&[1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let prd = prd_from_infinity_frontier(&frontier(&p, &q, Alpha::Infinity, FrontierSide::Exclusive, 51).unwrap()).unwrap();
        assert!(prd.contains(0.5, 1.0, 1e-12));
        assert_eq!(prd.max_precision(), 1.0);
        let reversed = prd_reference(&q, &p, 51).unwrap();
        assert!(reversed.contains(1.0, 0.5, 1e-12));
    }
}
