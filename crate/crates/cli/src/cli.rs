use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use divfront::{Alpha, FrontierSide};

/// Precision-recall divergence frontiers between distributions.
///
/// Inputs ending in `.json` are distribution specs
/// (`{"type":"histogram","probs":[...]}` or
/// `{"type":"gaussian","mean":[...],"cov":[[...]]}`); anything else is read
/// as a headerless CSV of samples, one per line. Results are written to the
/// `--output` file together with `<output>.manifest.json`.
#[derive(Debug, Parser)]
#[command(name = "divfront", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit a Gaussian to samples and write it as a JSON spec.
    Fit(FitArgs),
    /// Divergence frontier curves as CSV (`lambda,loss_recall,loss_precision`).
    Frontier(FrontierArgs),
    /// Precision-recall curve as CSV (`recall,precision`).
    Prd(PrdArgs),
    /// KL endpoints of fitted Gaussians as CSV (`precision_loss,recall_loss`).
    Endpoints(EndpointsArgs),
    /// k-nearest-neighbour support precision and recall as CSV.
    Knn(KnnArgs),
    /// Compare a histogram frontier with an exhaustive simplex-grid search.
    OracleCheck(OracleArgs),
    /// Run every estimator on two sample sets and write a JSON report.
    Pipeline(PipelineArgs),
}

#[derive(Debug, Args)]
pub struct Pair {
    /// Target distribution P (JSON spec or sample CSV).
    #[arg(long)]
    pub p: PathBuf,
    /// Model distribution Q (JSON spec or sample CSV).
    #[arg(long)]
    pub q: PathBuf,
    /// Output file.
    #[arg(long, short)]
    pub output: PathBuf,
}

/// Settings used when sample files have to be quantized into histograms.
#[derive(Debug, Args)]
pub struct Quantization {
    /// Number of k-means clusters.
    #[arg(long)]
    pub k_clusters: Option<usize>,
    /// Seed for k-means++ initialization.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Sample CSV.
    #[arg(long)]
    pub samples: PathBuf,
    /// Multiple of the identity added to the covariance.
    #[arg(long)]
    pub ridge: Option<f64>,
    #[arg(long, short)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct FrontierArgs {
    #[command(flatten)]
    pub pair: Pair,
    /// Rényi orders: `0`, `inf`, `1` or a positive decimal. Repeat or
    /// comma-separate for several; each gets its own output file.
    #[arg(long, value_delimiter = ',')]
    pub alpha: Vec<Alpha>,
    /// `exclusive` or `inclusive`.
    #[arg(long)]
    pub side: Option<FrontierSide>,
    /// Number of curve parameters sampled.
    #[arg(long)]
    pub grid_size: Option<usize>,
    #[command(flatten)]
    pub quantization: Quantization,
}

#[derive(Debug, Args)]
pub struct PrdArgs {
    #[command(flatten)]
    pub pair: Pair,
    #[arg(long)]
    pub grid_size: Option<usize>,
    #[command(flatten)]
    pub quantization: Quantization,
}

#[derive(Debug, Args)]
pub struct EndpointsArgs {
    #[command(flatten)]
    pub pair: Pair,
    #[arg(long)]
    pub ridge: Option<f64>,
}

#[derive(Debug, Args)]
pub struct KnnArgs {
    #[command(flatten)]
    pub pair: Pair,
    /// Neighbour rank defining each ball's radius.
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub pair: Pair,
    #[arg(long)]
    pub alpha: Alpha,
    #[arg(long)]
    pub side: Option<FrontierSide>,
    /// Grid denominator: histograms with entries i/m.
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PipelineArgs {
    #[command(flatten)]
    pub pair: Pair,
    /// JSON config; flags below override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub k_clusters: Option<usize>,
    #[arg(long)]
    pub knn_k: Option<usize>,
    #[arg(long)]
    pub ridge: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    pub alpha: Vec<Alpha>,
    #[arg(long)]
    pub grid_size: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub side: Option<FrontierSide>,
}
