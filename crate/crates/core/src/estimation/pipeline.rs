use serde::{Deserialize, Serialize};

use super::fit::fit_gaussian;
use super::kmeans::{quantize_with, QuantizationModel};
use super::knn::{knn_support_metrics_with, KnnMetrics, DEFAULT_KNN_K};
use super::samples::SampleMatrix;
use crate::alpha::{Alpha, Order};
use crate::error::{Error, Result};
use crate::expfam_frontier::{frontier_kl_with, kl_endpoints, KlEndpoints};
use crate::frontier::{frontier_with, prd_from_infinity_frontier, FrontierCurve, FrontierSide, PrdCurve, DEFAULT_GRID_SIZE};
use crate::histogram::Histogram;
use crate::io::DistributionSpec;
use crate::par::Execution;

/// Settings for [`evaluate_pipeline`]. Missing JSON fields take the
/// [`Default`] values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PipelineConfig {
    pub k_clusters: usize,
    pub knn_k: usize,
    pub ridge: f64,
    pub alphas: Vec<Alpha>,
    pub grid_size: usize,
    pub seed: u64,
    /// Side for the KL and finite-order frontiers. The α = ∞ frontier is
    /// always exclusive.
    pub side: FrontierSide,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        let half = Alpha::Finite(Order::new(0.5).expect("valid order"));
        let two = Alpha::Finite(Order::new(2.0).expect("valid order"));
        PipelineConfig {
            k_clusters: 20,
            knn_k: DEFAULT_KNN_K,
            ridge: 1e-6,
            alphas: vec![half, Alpha::One, two, Alpha::Infinity],
            grid_size: DEFAULT_GRID_SIZE,
            seed: 0,
            side: FrontierSide::Exclusive,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PipelineReport {
    pub config: PipelineConfig,
    pub gaussian_p: DistributionSpec,
    pub gaussian_q: DistributionSpec,
    pub kl_endpoints: KlEndpoints,
    pub kl_frontier: FrontierCurve,
    pub histogram_p: Histogram,
    pub histogram_q: Histogram,
    pub quantization: QuantizationModel,
    pub discrete_frontiers: Vec<FrontierCurve>,
    pub prd: PrdCurve,
    pub knn: KnnMetrics,
}

/// Runs both evaluation strategies on two sample sets: Gaussian fits with
/// their KL endpoints and frontier, and k-means histograms with Rényi
/// frontiers, the PRD curve and k-NN support estimates.
///
/// `α = 0` entries in `config.alphas` are covered by the k-NN estimate and
/// produce no discrete frontier.
pub fn evaluate_pipeline(p: &SampleMatrix, q: &SampleMatrix, config: &PipelineConfig) -> Result<PipelineReport> {
    evaluate_pipeline_with(p, q, config, Execution::default())
}

pub fn evaluate_pipeline_with(
    p: &SampleMatrix,
    q: &SampleMatrix,
    config: &PipelineConfig,
    exec: Execution,
) -> Result<PipelineReport> {
    if config.alphas.is_empty() {
        return Err(Error::InvalidParameter("alphas must not be empty".into()));
    }
    let gp = fit_gaussian(p, config.ridge)?;
    let gq = fit_gaussian(q, config.ridge)?;
    let endpoints = kl_endpoints(&gp, &gq)?;
    let kl_frontier = frontier_kl_with(&gp, &gq, config.side, config.grid_size, exec)?;

    let (hp, hq, model) = quantize_with(p, q, config.k_clusters, config.seed, exec)?;
    let mut discrete_frontiers = Vec::new();
    for &alpha in &config.alphas {
        let side = match alpha {
            Alpha::Zero => {
                log::info!("alpha = 0 is reported through the k-NN support estimate");
                continue;
            }
            Alpha::Infinity => FrontierSide::Exclusive,
            _ => config.side,
        };
        discrete_frontiers.push(frontier_with(&hp, &hq, alpha, side, config.grid_size, exec)?);
    }
    let infinity = match discrete_frontiers.iter().find(|c| c.alpha == Alpha::Infinity) {
        Some(c) => c.clone(),
        None => frontier_with(&hp, &hq, Alpha::Infinity, FrontierSide::Exclusive, config.grid_size, exec)?,
    };
    let prd = prd_from_infinity_frontier(&infinity)?;
    let knn = knn_support_metrics_with(p, q, config.knn_k, exec)?;

    Ok(PipelineReport {
        config: config.clone(),
        gaussian_p: DistributionSpec::from(&gp),
        gaussian_q: DistributionSpec::from(&gq),
        kl_endpoints: endpoints,
        kl_frontier,
        histogram_p: hp,
        histogram_q: hq,
        quantization: model,
        discrete_frontiers,
        prd,
        knn,
    })
}
