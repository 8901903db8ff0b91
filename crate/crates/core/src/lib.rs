//! Divergence frontiers for comparing a model distribution `Q` against a
//! data distribution `P`.
//!
//! The crate covers Rényi divergences for histograms and Gaussians,
//! closed-form frontier curves for histograms and exponential families,
//! precision-recall (PRD) curves as the α = ∞ special case, sample-based
//! estimators, and brute-force oracles for validating the closed forms.

pub mod alpha;
pub mod divergence;
pub mod error;
pub mod estimation;
pub mod expfam_frontier;
pub mod extended_float;
pub mod family;
pub mod frontier;
pub mod gaussian;
pub mod histogram;
pub mod io;
pub mod oracle;
pub mod par;
pub mod pareto;
pub mod synthetic;

pub use alpha::{Alpha, Order};
pub use error::{Error, Result};
pub use estimation::SampleMatrix;
pub use frontier::{FrontierCurve, FrontierPoint, FrontierSide, PrdCurve, PrdPoint};
pub use gaussian::GaussianParams;
pub use histogram::Histogram;
pub use par::Execution;
