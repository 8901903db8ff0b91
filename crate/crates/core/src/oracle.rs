//! Brute-force references for the closed-form results: exhaustive simplex
//! sweeps, dominance and Hausdorff scans between point sets, adaptive
//! quadrature and Monte Carlo estimates of Rényi divergences, and the
//! boundary-ray construction of the Funk metric and of maximal mixture
//! weights.

use std::collections::BinaryHeap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::alpha::Alpha;
use crate::divergence::renyi_discrete;
use crate::error::{ensure_same_dim, Error, Result};
use crate::frontier::{frontier_with, FrontierSide, DEFAULT_GRID_SIZE};
use crate::gaussian::{log_det, GaussianParams};
use crate::histogram::Histogram;
use crate::par::{chunked_reduce, map_slice, Execution, REDUCE_CHUNK};
use crate::pareto::pareto_filter;

/// Smoothing applied to grid histograms before evaluating divergences, so
/// that grid points on the simplex boundary give finite values.
pub const GRID_SMOOTHING: f64 = 1e-12;
pub const MAX_SIMPLEX_DIM: usize = 5;
pub const MONTE_CARLO_SAMPLES: usize = 1_000_000;

/// All histograms with entries `i/m`, in lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexGrid {
    pub n: usize,
    pub m: usize,
    pub points: Vec<Histogram>,
}

pub fn enumerate_simplex(n: usize, m: usize) -> Result<SimplexGrid> {
    if !(2..=MAX_SIMPLEX_DIM).contains(&n) {
        return Err(Error::InvalidParameter(format!("simplex dimension must be in 2..={MAX_SIMPLEX_DIM}, got {n}")));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("grid denominator must be at least 1".into()));
    }
    let mut points = Vec::new();
    let mut counts = vec![0usize; n];
    compositions(&mut counts, 0, m, &mut |c| {
        let probs = c.iter().map(|&k| k as f64 / m as f64).collect();
        points.push(Histogram::from_normalized(probs));
    });
    Ok(SimplexGrid { n, m, points })
}

fn compositions(counts: &mut [usize], i: usize, left: usize, emit: &mut impl FnMut(&[usize])) {
    if i + 1 == counts.len() {
        counts[i] = left;
        emit(counts);
        return;
    }
    for k in 0..=left {
        counts[i] = k;
        compositions(counts, i + 1, left - k, emit);
    }
}

/// Pareto-minimal divergence pairs over every grid histogram, using the same
/// argument order as [`crate::frontier::frontier`].
pub fn brute_force_frontier(
    p: &Histogram,
    q: &Histogram,
    alpha: Alpha,
    side: FrontierSide,
    grid: &SimplexGrid,
) -> Result<Vec<(f64, f64)>> {
    brute_force_frontier_with(p, q, alpha, side, grid, Execution::default())
}

pub fn brute_force_frontier_with(
    p: &Histogram,
    q: &Histogram,
    alpha: Alpha,
    side: FrontierSide,
    grid: &SimplexGrid,
    exec: Execution,
) -> Result<Vec<(f64, f64)>> {
    ensure_same_dim(p.len(), q.len())?;
    ensure_same_dim(p.len(), grid.n)?;
    let pairs = map_slice(exec, &grid.points, |r| {
        let r = r.smoothed(GRID_SMOOTHING);
        Ok(match side {
            FrontierSide::Exclusive => (renyi_discrete(&r, p, alpha)?, renyi_discrete(&r, q, alpha)?),
            FrontierSide::Inclusive => (renyi_discrete(p, &r, alpha)?, renyi_discrete(q, &r, alpha)?),
        })
    });
    Ok(pareto_filter(&pairs.into_iter().collect::<Result<Vec<_>>>()?))
}

fn gap(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        a - b
    }
}

/// Largest margin by which some point of `candidates` strictly improves on
/// a point of `curve` in both coordinates; zero if none does.
pub fn max_dominance_violation(curve: &[(f64, f64)], candidates: &[(f64, f64)]) -> f64 {
    let mut worst: f64 = 0.0;
    for &(cx, cy) in curve {
        for &(gx, gy) in candidates {
            let margin = gap(cx, gx).min(gap(cy, gy));
            if margin > worst {
                worst = margin;
            }
        }
    }
    worst
}

/// L∞ distance from `x` to the segment `[a, b]`.
fn point_segment_distance(x: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (u, v) = (x.0 - a.0, x.1 - a.1);
    let (du, dv) = (b.0 - a.0, b.1 - a.1);
    let f = |t: f64| (u - t * du).abs().max((v - t * dv).abs());
    // f is convex and piecewise linear; its minimum sits at a breakpoint.
    let mut candidates = vec![0.0, 1.0];
    for (num, den) in [(u, du), (v, dv), (u - v, du - dv), (u + v, du + dv)] {
        if den != 0.0 {
            candidates.push((num / den).clamp(0.0, 1.0));
        }
    }
    candidates.into_iter().map(f).fold(f64::INFINITY, f64::min)
}

fn finite_sorted(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut v: Vec<_> = points.iter().copied().filter(|(x, y)| x.is_finite() && y.is_finite()).collect();
    v.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    v
}

/// L∞ distance from `x` to the boundary of the region dominated by a
/// Pareto front: the polyline through `front` (ordered by first coordinate),
/// a vertical ray above its first point and a horizontal ray to the right of
/// its last point.
fn point_front_distance(x: (f64, f64), front: &[(f64, f64)]) -> f64 {
    let (Some(&first), Some(&last)) = (front.first(), front.last()) else {
        return f64::INFINITY;
    };
    let up = (x.0 - first.0).abs().max((first.1 - x.1).max(0.0));
    let right = (x.1 - last.1).abs().max((last.0 - x.0).max(0.0));
    front
        .windows(2)
        .map(|w| point_segment_distance(x, w[0], w[1]))
        .fold(up.min(right), f64::min)
}

/// Symmetric Hausdorff distance in the L∞ norm between the boundaries of the
/// regions dominated by the finite points of `a` and of `b`.
///
/// Each front is closed off by rays, so a point just beyond the end of the
/// other front, but on the boundary of its dominated region, counts as close.
pub fn hausdorff_distance(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let (a, b) = (finite_sorted(a), finite_sorted(b));
    if a.is_empty() && b.is_empty() {
        return 0.0;
    }
    let one_way = |from: &[(f64, f64)], to: &[(f64, f64)]| {
        from.iter().map(|&x| point_front_distance(x, to)).fold(0.0, f64::max)
    };
    one_way(&a, &b).max(one_way(&b, &a))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleVerdict {
    pub max_dominance_violation: f64,
    pub hausdorff_distance: f64,
    pub pass: bool,
}

/// Compares the closed-form frontier with the exhaustive grid frontier at
/// denominator `m`. Passes when no grid point dominates the closed form by
/// more than `2/m` and the two curves are within Hausdorff distance `5/m`.
pub fn oracle_check(
    p: &Histogram,
    q: &Histogram,
    alpha: Alpha,
    side: FrontierSide,
    m: usize,
    exec: Execution,
) -> Result<OracleVerdict> {
    let grid = enumerate_simplex(p.len(), m)?;
    let oracle = brute_force_frontier_with(p, q, alpha, side, &grid, exec)?;
    let closed = frontier_with(p, q, alpha, side, DEFAULT_GRID_SIZE, exec)?.pairs();
    let violation = max_dominance_violation(&closed, &oracle);
    let hausdorff = hausdorff_distance(&oracle, &closed);
    let tol = 1.0 / m as f64;
    Ok(OracleVerdict {
        max_dominance_violation: violation,
        hausdorff_distance: hausdorff,
        pass: violation <= 2.0 * tol && hausdorff <= 5.0 * tol,
    })
}

/// `a + t*(b - a)` for the largest `t` keeping the ray from `a` through `b`
/// in the simplex, together with `t*`. `None` when `a = b` (the ray is a
/// point).
pub fn boundary_point(a: &Histogram, b: &Histogram) -> Result<Option<(Histogram, f64)>> {
    ensure_same_dim(a.len(), b.len())?;
    let t = a
        .probs()
        .iter()
        .zip(b.probs())
        .filter(|(ai, bi)| bi < ai)
        .map(|(ai, bi)| ai / (ai - bi))
        .fold(f64::INFINITY, f64::min);
    if t.is_infinite() {
        return Ok(None);
    }
    let x: Vec<f64> = a.probs().iter().zip(b.probs()).map(|(ai, bi)| (ai + t * (bi - ai)).max(0.0)).collect();
    Ok(Some((Histogram::new(x)?, t)))
}

/// Funk weak metric from its geometric definition:
/// `log(|a - ∂(a,b)| / |b - ∂(a,b)|)`, with `∂(a,b)` the exit point of
/// the ray from `a` through `b`.
pub fn funk_metric_boundary(a: &Histogram, b: &Histogram) -> Result<f64> {
    Ok(match boundary_point(a, b)? {
        None => 0.0,
        Some((_, t)) if t <= 1.0 => f64::INFINITY,
        Some((_, t)) => (t / (t - 1.0)).ln(),
    })
}

/// Largest `w` such that `b = w·a + (1 - w)·c` for some distribution `c`,
/// obtained from the exit point `c = ∂(a, b)`.
pub fn max_mixture_weight(a: &Histogram, b: &Histogram) -> Result<f64> {
    Ok(match boundary_point(a, b)? {
        None => 1.0,
        Some((_, t)) => (1.0 - 1.0 / t).max(0.0),
    })
}

/// Numerical estimate with an error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

// Gauss–Kronrod 7/15 nodes and weights.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gauss_kronrod(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let (c, h) = (0.5 * (a + b), 0.5 * (b - a));
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let x = h * XGK[j];
        let s = f(c - x) + f(c + x);
        kronrod += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error).is_eq()
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Globally adaptive Gauss–Kronrod integration of `f` over the real line
/// via `x = center + scale·t/(1 - t²)`.
pub fn integrate_real_line(f: impl Fn(f64) -> f64, center: f64, scale: f64, tol: f64) -> Estimate {
    let g = |t: f64| {
        let d = 1.0 - t * t;
        let y = f(center + scale * t / d);
        if y == 0.0 {
            0.0
        } else {
            y * scale * (1.0 + t * t) / (d * d)
        }
    };
    const INITIAL: usize = 16;
    const MAX_PIECES: usize = 4000;
    let mut heap = BinaryHeap::new();
    for k in 0..INITIAL {
        let a = -1.0 + 2.0 * k as f64 / INITIAL as f64;
        let b = -1.0 + 2.0 * (k + 1) as f64 / INITIAL as f64;
        let (value, error) = gauss_kronrod(&g, a, b);
        heap.push(Piece { a, b, value, error });
    }
    loop {
        let value: f64 = heap.iter().map(|p| p.value).sum();
        let error: f64 = heap.iter().map(|p| p.error).sum();
        if error <= tol.max(tol * value.abs()) || heap.len() >= MAX_PIECES || !value.is_finite() {
            return Estimate { value, error };
        }
        let worst = heap.pop().expect("nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        for (a, b) in [(worst.a, mid), (mid, worst.b)] {
            let (value, error) = gauss_kronrod(&g, a, b);
            heap.push(Piece { a, b, value, error });
        }
    }
}

/// Rényi divergence between two one-dimensional densities given by their
/// log densities, by quadrature of `∫ p^α q^{1-α}` (or `∫ p log(p/q)` for
/// `α = 1`). `center` and `scale` place the bulk of the mass.
pub fn renyi_quadrature_1d(
    ln_p: impl Fn(f64) -> f64,
    ln_q: impl Fn(f64) -> f64,
    alpha: Alpha,
    center: f64,
    scale: f64,
) -> Result<Estimate> {
    const TOL: f64 = 1e-12;
    match alpha {
        Alpha::One => {
            let est = integrate_real_line(
                |x| {
                    let lp = ln_p(x);
                    let w = lp.exp();
                    if w == 0.0 {
                        0.0
                    } else {
                        w * (lp - ln_q(x))
                    }
                },
                center,
                scale,
                TOL,
            );
            Ok(Estimate { value: est.value.max(0.0), error: est.error })
        }
        Alpha::Finite(order) => {
            let a = order.get();
            let est = integrate_real_line(|x| (a * ln_p(x) + (1.0 - a) * ln_q(x)).exp(), center, scale, TOL);
            let value = est.value.ln() / (a - 1.0);
            let error = est.error / (est.value * (a - 1.0).abs());
            Ok(Estimate { value: value.max(0.0), error })
        }
        Alpha::Zero => {
            let est = integrate_real_line(
                |x| if ln_p(x) > f64::NEG_INFINITY { ln_q(x).exp() } else { 0.0 },
                center,
                scale,
                TOL,
            );
            Ok(Estimate { value: (-est.value.ln()).max(0.0), error: est.error / est.value })
        }
        Alpha::Infinity => Err(Error::Unsupported("the alpha = inf divergence is a supremum, not an integral".into())),
    }
}

/// Numerical Rényi divergence between Gaussians: adaptive quadrature in one
/// dimension, Monte Carlo with [`MONTE_CARLO_SAMPLES`] draws from `P`
/// otherwise.
pub fn divergence_quadrature(p: &GaussianParams, q: &GaussianParams, alpha: Alpha) -> Result<Estimate> {
    divergence_quadrature_with(p, q, alpha, 0, Execution::default())
}

pub fn divergence_quadrature_with(
    p: &GaussianParams,
    q: &GaussianParams,
    alpha: Alpha,
    seed: u64,
    exec: Execution,
) -> Result<Estimate> {
    ensure_same_dim(p.dim(), q.dim())?;
    if p.dim() == 1 {
        let (mp, vp) = (p.mean()[0], p.cov()[(0, 0)]);
        let (mq, vq) = (q.mean()[0], q.cov()[(0, 0)]);
        let center = 0.5 * (mp + mq);
        let scale = vp.sqrt().max(vq.sqrt());
        return renyi_quadrature_1d(|x| ln_normal(x, mp, vp), |x| ln_normal(x, mq, vq), alpha, center, scale);
    }
    monte_carlo(p, q, alpha, MONTE_CARLO_SAMPLES, seed, exec)
}

fn ln_normal(x: f64, mean: f64, var: f64) -> f64 {
    -0.5 * ((x - mean) * (x - mean) / var + (2.0 * std::f64::consts::PI * var).ln())
}

/// Gaussian log density with a precomputed Cholesky factor, evaluated
/// without allocation.
struct LogDensity {
    dim: usize,
    mean: Vec<f64>,
    /// Lower-triangular factor, row-major.
    l: Vec<f64>,
    constant: f64,
}

impl LogDensity {
    fn new(g: &GaussianParams) -> Self {
        let chol = g.cholesky();
        let d = g.dim();
        let l = chol.l();
        LogDensity {
            dim: d,
            mean: g.mean().iter().copied().collect(),
            l: (0..d * d).map(|k| l[(k / d, k % d)]).collect(),
            constant: -0.5 * (log_det(&chol) + d as f64 * (2.0 * std::f64::consts::PI).ln()),
        }
    }

    fn eval(&self, x: &[f64], z: &mut [f64]) -> f64 {
        let d = self.dim;
        let mut norm = 0.0;
        for i in 0..d {
            let row = &self.l[i * d..i * d + i];
            let partial: f64 = row.iter().zip(&z[..i]).map(|(a, b)| a * b).sum();
            z[i] = (x[i] - self.mean[i] - partial) / self.l[i * d + i];
            norm += z[i] * z[i];
        }
        self.constant - 0.5 * norm
    }

    /// `mean + L·z`.
    fn transform(&self, z: &[f64], x: &mut [f64]) {
        let d = self.dim;
        for (i, (xi, m)) in x.iter_mut().zip(&self.mean).enumerate().take(d) {
            *xi = m + self.l[i * d..=i * d + i].iter().zip(z).map(|(a, b)| a * b).sum::<f64>();
        }
    }
}

fn monte_carlo(p: &GaussianParams, q: &GaussianParams, alpha: Alpha, n: usize, seed: u64, exec: Execution) -> Result<Estimate> {
    let a = match alpha {
        Alpha::One => 1.0,
        Alpha::Finite(o) => o.get(),
        other => return Err(Error::Unsupported(format!("Monte Carlo estimate for alpha = {other}"))),
    };
    let (lp, lq) = (LogDensity::new(p), LogDensity::new(q));
    let d = p.dim();
    let (sum, sum_sq) = chunked_reduce(
        exec,
        n,
        |range| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream((range.start / REDUCE_CHUNK) as u64);
            let (mut s, mut s2) = (0.0, 0.0);
            let (mut z, mut x, mut work) = (vec![0.0; d], vec![0.0; d], vec![0.0; d]);
            for _ in range {
                z.iter_mut().for_each(|v| *v = StandardNormal.sample(&mut rng));
                lp.transform(&z, &mut x);
                let log_ratio = lp.eval(&x, &mut work) - lq.eval(&x, &mut work);
                let v = if a == 1.0 { log_ratio } else { ((a - 1.0) * log_ratio).exp() };
                s += v;
                s2 += v * v;
            }
            (s, s2)
        },
        |x, y| (x.0 + y.0, x.1 + y.1),
    )
    .ok_or_else(|| Error::InvalidParameter("Monte Carlo needs at least one sample".into()))?;
    let nf = n as f64;
    let mean = sum / nf;
    let sd = ((sum_sq / nf - mean * mean).max(0.0) * nf / (nf - 1.0).max(1.0)).sqrt() / nf.sqrt();
    if a == 1.0 {
        Ok(Estimate { value: mean, error: sd })
    } else {
        Ok(Estimate { value: mean.ln() / (a - 1.0), error: sd / (mean * (a - 1.0).abs()) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divergence::{funk_metric, kl_gaussian, renyi_gaussian};

    fn h(v: &[f64]) -> Histogram {
        Histogram::new(v.to_vec()).unwrap()
    }

    #[test]
    fn simplex_counts_and_order() {
        let g = enumerate_simplex(2, 2).unwrap();
        let pts: Vec<&[f64]> = g.points.iter().map(|p| p.probs()).collect();
        assert_eq!(pts, vec![&[0.0, 1.0][..], &[0.5, 0.5], &[1.0, 0.0]]);
        assert_eq!(enumerate_simplex(3, 4).unwrap().points.len(), 15);
        assert_eq!(enumerate_simplex(3, 60).unwrap().points.len(), 1891);
        assert!(enumerate_simplex(6, 2).is_err());
        assert!(enumerate_simplex(1, 2).is_err());
    }

    #[test]
    fn brute_force_identical_inputs() {
        let p = h(&[0.25, 0.25, 0.5]);
        let grid = enumerate_simplex(3, 4).unwrap();
        for side in [FrontierSide::Exclusive, FrontierSide::Inclusive] {
            let f = brute_force_frontier(&p, &p, Alpha::new(2.0).unwrap(), side, &grid).unwrap();
            assert_eq!(f.len(), 1);
            assert!(f[0].0 < 1e-9 && f[0].1 < 1e-9);
        }
    }

    #[test]
    fn dominance_and_hausdorff() {
        let curve = [(0.0, 2.0), (1.0, 1.0), (2.0, 0.0)];
        assert_eq!(max_dominance_violation(&curve, &[(1.0, 1.0), (3.0, 3.0)]), 0.0);
        assert!((max_dominance_violation(&curve, &[(0.75, 0.5)]) - 0.25).abs() < 1e-15);
        assert_eq!(max_dominance_violation(&[(f64::INFINITY, 0.0)], &[(1.0, 0.0)]), 0.0);
        assert_eq!(hausdorff_distance(&curve, &curve), 0.0);
        // (0.5, 1.5) lies on the front, but (2, 0) is 1.5 away from its rays
        assert_eq!(hausdorff_distance(&[(0.5, 1.5)], &curve), 1.5);
        assert!((point_front_distance((1.0, 0.0), &curve) - 0.5).abs() < 1e-15);
        // beyond the last point, on the horizontal ray
        assert_eq!(point_front_distance((3.0, 0.0), &curve), 0.0);
        assert_eq!(point_front_distance((0.0, 5.0), &curve), 0.0);
        assert!((point_segment_distance((0.5, 1.5), (0.0, 2.0), (1.0, 1.0))).abs() < 1e-15);
    }

    #[test]
    fn check_passes_on_fixture() {
        let p = h(&[0.2, 0.5, 0.3]);
        let q = h(&[0.6, 0.1, 0.3]);
        let v = oracle_check(&p, &q, Alpha::new(2.0).unwrap(), FrontierSide::Exclusive, 30, Execution::default()).unwrap();
        assert!(v.pass, "{v:?}");
    }

    #[test]
    fn boundary_construction() {
        let a = h(&[0.5, 0.5]);
        let b = h(&[0.25, 0.75]);
        let (x, t) = boundary_point(&a, &b).unwrap().unwrap();
        assert_eq!(t, 2.0);
        assert_eq!(x.probs(), &[0.0, 1.0]);
        assert!((funk_metric_boundary(&a, &b).unwrap() - 2f64.ln()).abs() < 1e-15);
        assert_eq!(funk_metric_boundary(&a, &a).unwrap(), 0.0);
        assert_eq!(funk_metric_boundary(&a, &h(&[1.0, 0.0])).unwrap(), f64::INFINITY);
        let c = h(&[0.1, 0.3, 0.6]);
        let d = h(&[0.3, 0.3, 0.4]);
        assert!((funk_metric_boundary(&c, &d).unwrap() - funk_metric(&c, &d).unwrap()).abs() < 1e-14);
        // b = 0.5·a + 0.5·(0, 1)
        assert!((max_mixture_weight(&a, &b).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn quadrature_values() {
        let p = GaussianParams::univariate(1.0, 1.0).unwrap();
        let q = GaussianParams::univariate(0.0, 1.0).unwrap();
        let kl = divergence_quadrature(&p, &q, Alpha::One).unwrap();
        assert!((kl.value - 0.5).abs() < 1e-9, "{kl:?}");
        let same = divergence_quadrature(&p, &p, Alpha::new(0.7).unwrap()).unwrap();
        assert!(same.value.abs() < 1e-10);
        let half = Alpha::new(0.5).unwrap();
        let est = divergence_quadrature(&p, &q, half).unwrap();
        assert!((est.value - renyi_gaussian(&p, &q, half).unwrap()).abs() < 1e-9);
        let zero = divergence_quadrature(&p, &q, Alpha::Zero).unwrap();
        assert!(zero.value.abs() < 1e-9);
        assert!(divergence_quadrature(&p, &q, Alpha::Infinity).is_err());
    }

    #[test]
    fn monte_carlo_is_deterministic_and_close() {
        let p = GaussianParams::from_rows(&[0.5, 0.0], &[vec![1.0, 0.3], vec![0.3, 1.5]]).unwrap();
        let q = GaussianParams::standard(2).unwrap();
        let a = monte_carlo(&p, &q, Alpha::One, 20_000, 3, Execution::Sequential).unwrap();
        let b = monte_carlo(&p, &q, Alpha::One, 20_000, 3, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        let exact = kl_gaussian(&p, &q).unwrap();
        assert!((a.value - exact).abs() <= 4.0 * a.error, "{a:?} vs {exact}");
    }
}
