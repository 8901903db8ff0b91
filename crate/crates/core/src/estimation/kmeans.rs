use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::samples::{squared_distance, SampleMatrix};
use crate::error::{ensure_same_dim, Error, Result};
use crate::histogram::Histogram;
use crate::par::{chunked_reduce, chunked_sum, map_range, Execution};

/// Additive smoothing applied to every bin before normalization, so that
/// empty bins do not force infinite divergences.
pub const HISTOGRAM_SMOOTHING: f64 = 1e-10;
pub const MAX_LLOYD_ITERATIONS: usize = 300;
const RELATIVE_TOL: f64 = 1e-6;

/// Fitted k-means codebook shared by both sample sets.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuantizationModel {
    centers: Vec<f64>,
    k: usize,
    dim: usize,
    pub seed: u64,
    pub iterations: usize,
    pub inertia: f64,
}

impl QuantizationModel {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn center(&self, j: usize) -> &[f64] {
        &self.centers[j * self.dim..(j + 1) * self.dim]
    }

    /// Index of the nearest center; ties go to the lower index.
    pub fn nearest(&self, x: &[f64]) -> (usize, f64) {
        nearest(&self.centers, self.dim, x)
    }

    pub fn assign(&self, samples: &SampleMatrix, exec: Execution) -> Result<Vec<usize>> {
        ensure_same_dim(self.dim, samples.ncols())?;
        Ok(map_range(exec, samples.nrows(), |i| self.nearest(samples.row(i)).0))
    }

    /// Smoothed, normalized histogram of cluster assignments.
    pub fn histogram(&self, samples: &SampleMatrix, exec: Execution) -> Result<Histogram> {
        let mut counts = vec![0usize; self.k];
        for j in self.assign(samples, exec)? {
            counts[j] += 1;
        }
        let n = samples.nrows() as f64;
        Histogram::new(counts.iter().map(|&c| c as f64 / n + HISTOGRAM_SMOOTHING).collect())
    }
}

fn nearest(centers: &[f64], dim: usize, x: &[f64]) -> (usize, f64) {
    let mut best = (0, f64::INFINITY);
    for (j, c) in centers.chunks_exact(dim).enumerate() {
        let d = squared_distance(c, x);
        if d < best.1 {
            best = (j, d);
        }
    }
    best
}

/// Clusters the pooled samples of `P` and `Q` and returns the two
/// cluster-assignment histograms over the shared bins.
pub fn quantize(
    samples_p: &SampleMatrix,
    samples_q: &SampleMatrix,
    k: usize,
    seed: u64,
) -> Result<(Histogram, Histogram, QuantizationModel)> {
    quantize_with(samples_p, samples_q, k, seed, Execution::default())
}

pub fn quantize_with(
    samples_p: &SampleMatrix,
    samples_q: &SampleMatrix,
    k: usize,
    seed: u64,
    exec: Execution,
) -> Result<(Histogram, Histogram, QuantizationModel)> {
    let pooled = samples_p.stack(samples_q)?;
    let model = kmeans(&pooled, k, seed, exec)?;
    let hp = model.histogram(samples_p, exec)?;
    let hq = model.histogram(samples_q, exec)?;
    Ok((hp, hq, model))
}

/// k-means++ seeding followed by Lloyd iterations until the relative change
/// in inertia drops below 1e-6 or 300 iterations have run.
pub(crate) fn kmeans(samples: &SampleMatrix, k: usize, seed: u64, exec: Execution) -> Result<QuantizationModel> {
    let (n, dim) = (samples.nrows(), samples.ncols());
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k-means needs k >= 2, got {k}")));
    }
    if k > n {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds the {n} pooled samples")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut centers = seed_plus_plus(samples, k, &mut rng, exec)?;

    let mut prev = f64::INFINITY;
    let mut iterations = 0;
    let mut inertia;
    loop {
        let assignment = map_range(exec, n, |i| nearest(&centers, dim, samples.row(i)));
        inertia = chunked_sum(exec, n, |i| assignment[i].1);
        let converged = inertia == 0.0 || (prev.is_finite() && (prev - inertia).abs() <= RELATIVE_TOL * prev);
        if converged || iterations == MAX_LLOYD_ITERATIONS {
            break;
        }
        iterations += 1;
        prev = inertia;

        let (sums, counts) = chunked_reduce(
            exec,
            n,
            |range| {
                let mut sums = vec![0.0; k * dim];
                let mut counts = vec![0usize; k];
                for i in range {
                    let j = assignment[i].0;
                    counts[j] += 1;
                    for (s, x) in sums[j * dim..(j + 1) * dim].iter_mut().zip(samples.row(i)) {
                        *s += x;
                    }
                }
                (sums, counts)
            },
            |(mut s1, mut c1), (s2, c2)| {
                s1.iter_mut().zip(s2).for_each(|(a, b)| *a += b);
                c1.iter_mut().zip(c2).for_each(|(a, b)| *a += b);
                (s1, c1)
            },
        )
        .expect("at least one sample");

        let mut spare: Vec<f64> = assignment.iter().map(|a| a.1).collect();
        for j in 0..k {
            let center = &mut centers[j * dim..(j + 1) * dim];
            if counts[j] > 0 {
                for (c, s) in center.iter_mut().zip(&sums[j * dim..(j + 1) * dim]) {
                    *c = s / counts[j] as f64;
                }
            } else {
                // Empty cluster: move it to the point worst served by its center.
                let far = (0..n).fold(0, |best, i| if spare[i] > spare[best] { i } else { best });
                center.copy_from_slice(samples.row(far));
                spare[far] = 0.0;
            }
        }
    }
    log::debug!("k-means: k = {k}, {iterations} Lloyd iterations, inertia {inertia}");
    Ok(QuantizationModel { centers, k, dim, seed, iterations, inertia })
}

fn seed_plus_plus(samples: &SampleMatrix, k: usize, rng: &mut ChaCha8Rng, exec: Execution) -> Result<Vec<f64>> {
    let (n, dim) = (samples.nrows(), samples.ncols());
    let mut centers = Vec::with_capacity(k * dim);
    centers.extend_from_slice(samples.row(rng.random_range(0..n)));
    let mut d2 = map_range(exec, n, |i| squared_distance(samples.row(i), &centers[..dim]));
    for _ in 1..k {
        let total: f64 = d2.iter().sum();
        if total <= 0.0 {
            return Err(Error::InvalidParameter(format!("fewer than k = {k} distinct samples")));
        }
        let target = rng.random::<f64>() * total;
        let mut acc = 0.0;
        let mut pick = None;
        for (i, &w) in d2.iter().enumerate() {
            if w > 0.0 {
                pick = Some(i);
                acc += w;
                if acc > target {
                    break;
                }
            }
        }
        let row = samples.row(pick.expect("positive total weight"));
        centers.extend_from_slice(row);
        let updated = map_range(exec, n, |i| d2[i].min(squared_distance(samples.row(i), row)));
        d2 = updated;
    }
    Ok(centers)
}
