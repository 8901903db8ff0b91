use serde::Serialize;

use crate::error::{ensure_same_dim, Error, Result};

/// A point on the probability simplex.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Histogram {
    probs: Vec<f64>,
}

impl Histogram {
    /// Builds a histogram from nonnegative weights, normalizing them to sum to one.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidDistribution("histogram must have at least one bin".into()));
        }
        for (i, &w) in weights.iter().enumerate() {
            if !w.is_finite() {
                return Err(Error::InvalidDistribution(format!("non-finite weight {w} at bin {i}")));
            }
            if w < 0.0 {
                return Err(Error::InvalidDistribution(format!("negative weight {w} at bin {i}")));
            }
        }
        let total: f64 = weights.iter().sum();
        if total <= 0.0 {
            return Err(Error::InvalidDistribution("weights sum to zero".into()));
        }
        let probs = weights.into_iter().map(|w| w / total).collect();
        Ok(Histogram { probs })
    }

    /// Wraps probabilities already known to be nonnegative and to sum to one
    /// up to rounding, keeping the values bit for bit.
    pub(crate) fn from_normalized(probs: Vec<f64>) -> Self {
        debug_assert!(probs.iter().all(|&p| p >= 0.0) && (probs.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        Histogram { probs }
    }

    /// Normalizes `exp(log_weights)` with a max shift, so very large or very
    /// small log-weights do not overflow. `-∞` entries become exact zeros.
    pub(crate) fn from_log_weights(log_weights: &[f64]) -> Result<Self> {
        let max = log_weights.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if max == f64::NEG_INFINITY {
            return Err(Error::Domain("all bins have zero mass".into()));
        }
        if !max.is_finite() {
            return Err(Error::Domain("unbounded log-weight".into()));
        }
        Histogram::new(log_weights.iter().map(|&l| (l - max).exp()).collect())
    }

    pub fn uniform(n: usize) -> Result<Self> {
        Histogram::new(vec![1.0; n])
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Total mass this histogram places on the support of `other`.
    pub fn mass_on_support_of(&self, other: &Histogram) -> Result<f64> {
        ensure_same_dim(self.len(), other.len())?;
        Ok(self
            .probs
            .iter()
            .zip(&other.probs)
            .filter(|(_, &o)| o > 0.0)
            .map(|(&s, _)| s)
            .sum())
    }

    pub fn total_variation(&self, other: &Histogram) -> Result<f64> {
        ensure_same_dim(self.len(), other.len())?;
        Ok(0.5 * self.probs.iter().zip(&other.probs).map(|(a, b)| (a - b).abs()).sum::<f64>())
    }

    /// Adds `eps` to every bin and renormalizes.
    pub fn smoothed(&self, eps: f64) -> Histogram {
        let total = 1.0 + eps * self.len() as f64;
        Histogram { probs: self.probs.iter().map(|&p| (p + eps) / total).collect() }
    }
}

impl AsRef<[f64]> for Histogram {
    fn as_ref(&self) -> &[f64] {
        &self.probs
    }
}
