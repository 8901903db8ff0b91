use serde::Serialize;

use super::samples::{squared_distance, SampleMatrix};
use crate::error::{ensure_same_dim, Error, Result};
use crate::par::{chunked_sum, map_range, Execution};

pub const DEFAULT_KNN_K: usize = 3;

/// Support-overlap estimates in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KnnMetrics {
    /// Fraction of `Q` samples inside the estimated support of `P`.
    pub precision: f64,
    /// Fraction of `P` samples inside the estimated support of `Q`.
    pub recall: f64,
}

/// Estimates the support of each sample set as the union of balls around its
/// samples, each with radius equal to the distance to the sample's `k`-th
/// nearest neighbour in the same set, and reports the fraction of the other
/// set falling inside (boundary included).
///
/// Exact brute force: `O((n_P + n_Q)² d)` distance evaluations.
pub fn knn_support_metrics(samples_p: &SampleMatrix, samples_q: &SampleMatrix, k: usize) -> Result<KnnMetrics> {
    knn_support_metrics_with(samples_p, samples_q, k, Execution::default())
}

pub fn knn_support_metrics_with(
    samples_p: &SampleMatrix,
    samples_q: &SampleMatrix,
    k: usize,
    exec: Execution,
) -> Result<KnnMetrics> {
    ensure_same_dim(samples_p.ncols(), samples_q.ncols())?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    for (name, s) in [("P", samples_p), ("Q", samples_q)] {
        if k >= s.nrows() {
            return Err(Error::InvalidParameter(format!(
                "k = {k} needs more than {k} samples in {name}, found {}",
                s.nrows()
            )));
        }
    }
    let radii_p = kth_neighbour_radii(samples_p, k, exec);
    let radii_q = kth_neighbour_radii(samples_q, k, exec);
    Ok(KnnMetrics {
        precision: coverage(samples_p, &radii_p, samples_q, exec),
        recall: coverage(samples_q, &radii_q, samples_p, exec),
    })
}

/// Squared distance from each sample to its `k`-th nearest other sample.
fn kth_neighbour_radii(s: &SampleMatrix, k: usize, exec: Execution) -> Vec<f64> {
    let n = s.nrows();
    map_range(exec, n, |i| {
        let mut d: Vec<f64> = (0..n).filter(|&j| j != i).map(|j| squared_distance(s.row(i), s.row(j))).collect();
        let (_, kth, _) = d.select_nth_unstable_by(k - 1, f64::total_cmp);
        *kth
    })
}

fn coverage(centers: &SampleMatrix, radii: &[f64], queries: &SampleMatrix, exec: Execution) -> f64 {
    let inside = chunked_sum(exec, queries.nrows(), |i| {
        let x = queries.row(i);
        let hit = centers.rows().zip(radii).any(|(c, &r)| squared_distance(c, x) <= r);
        if hit {
            1.0
        } else {
            0.0
        }
    });
    inside / queries.nrows() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(offset: f64) -> SampleMatrix {
        let rows: Vec<[f64; 2]> = (0..100).map(|i| [(i % 10) as f64 + offset, (i / 10) as f64]).collect();
        SampleMatrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn identical_sets() {
        let a = grid(0.0);
        assert_eq!(knn_support_metrics(&a, &a, 3).unwrap(), KnnMetrics { precision: 1.0, recall: 1.0 });
    }

    #[test]
    fn separated_sets() {
        let m = knn_support_metrics(&grid(0.0), &grid(1000.0), 3).unwrap();
        assert_eq!((m.precision, m.recall), (0.0, 0.0));
    }

    #[test]
    fn swap_exchanges_metrics() {
        let a = grid(0.0);
        let b = grid(4.5);
        let ab = knn_support_metrics(&a, &b, 2).unwrap();
        let ba = knn_support_metrics(&b, &a, 2).unwrap();
        assert_eq!((ab.precision, ab.recall), (ba.recall, ba.precision));
        assert!(ab.precision > 0.0 && ab.precision < 1.0);
    }

    #[test]
    fn radius_is_kth_neighbour() {
        let s = SampleMatrix::from_column(vec![0.0, 1.0, 3.0, 7.0]).unwrap();
        assert_eq!(kth_neighbour_radii(&s, 1, Execution::Sequential), vec![1.0, 1.0, 4.0, 16.0]);
        assert_eq!(kth_neighbour_radii(&s, 2, Execution::Sequential), vec![9.0, 4.0, 9.0, 36.0]);
    }

    #[test]
    fn too_few_samples() {
        let s = SampleMatrix::from_column(vec![0.0, 1.0, 2.0]).unwrap();
        assert!(knn_support_metrics(&s, &s, 3).is_err());
        assert!(knn_support_metrics(&s, &s, 0).is_err());
        assert!(knn_support_metrics(&s, &s, 2).is_ok());
    }
}
