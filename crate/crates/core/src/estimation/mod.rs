//! From sample embeddings to distributions: Gaussian fitting, k-means
//! quantization into shared-bin histograms, the k-nearest-neighbour support
//! estimator, and an end-to-end evaluation pipeline.

mod fit;
mod kmeans;
mod knn;
mod pipeline;
mod samples;

pub use fit::fit_gaussian;
pub use kmeans::{quantize, quantize_with, QuantizationModel, HISTOGRAM_SMOOTHING, MAX_LLOYD_ITERATIONS};
pub use knn::{knn_support_metrics, knn_support_metrics_with, KnnMetrics, DEFAULT_KNN_K};
pub use pipeline::{evaluate_pipeline, evaluate_pipeline_with, PipelineConfig, PipelineReport};
pub use samples::SampleMatrix;
