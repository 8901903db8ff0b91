//! File formats: JSON distribution specs, headerless sample CSVs, and the
//! frontier / PRD CSV outputs.

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimation::SampleMatrix;
use crate::frontier::{FrontierCurve, PrdCurve};
use crate::gaussian::GaussianParams;
use crate::histogram::Histogram;

/// `{"type":"histogram","probs":[...]}` or
/// `{"type":"gaussian","mean":[...],"cov":[[...]]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum DistributionSpec {
    Histogram { probs: Vec<f64> },
    Gaussian { mean: Vec<f64>, cov: Vec<Vec<f64>> },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Distribution {
    Histogram(Histogram),
    Gaussian(GaussianParams),
}

impl DistributionSpec {
    pub fn build(&self) -> Result<Distribution> {
        Ok(match self {
            DistributionSpec::Histogram { probs } => Distribution::Histogram(Histogram::new(probs.clone())?),
            DistributionSpec::Gaussian { mean, cov } => Distribution::Gaussian(GaussianParams::from_rows(mean, cov)?),
        })
    }
}

impl From<&GaussianParams> for DistributionSpec {
    fn from(g: &GaussianParams) -> Self {
        let cov = g.cov();
        DistributionSpec::Gaussian {
            mean: g.mean().iter().copied().collect(),
            cov: (0..g.dim()).map(|i| cov.row(i).iter().copied().collect()).collect(),
        }
    }
}

impl From<&Histogram> for DistributionSpec {
    fn from(h: &Histogram) -> Self {
        DistributionSpec::Histogram { probs: h.probs().to_vec() }
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { line: (e.line() > 0).then_some(e.line()), message: e.to_string() }
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(json_error)
}

pub fn parse_distribution(text: &str) -> Result<Distribution> {
    parse_json::<DistributionSpec>(text)?.build()
}

pub fn read_distribution(path: impl AsRef<Path>) -> Result<Distribution> {
    parse_distribution(&std::fs::read_to_string(path)?)
}

/// Headerless CSV, one sample per line. Blank lines are skipped.
pub fn parse_samples<R: Read>(reader: R) -> Result<SampleMatrix> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(reader);
    let mut data = Vec::new();
    let mut ncols = None;
    for record in rdr.records() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map(|p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = record.position().map(|p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        match ncols {
            None => ncols = Some(record.len()),
            Some(n) if n != record.len() => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {n} fields, found {}", record.len()),
                })
            }
            _ => {}
        }
        for field in record.iter() {
            let v: f64 = field
                .parse()
                .map_err(|_| Error::Parse { line, message: format!("invalid number {field:?}") })?;
            if !v.is_finite() {
                return Err(Error::Parse { line, message: format!("non-finite value {field:?}") });
            }
            data.push(v);
        }
    }
    let ncols = ncols.ok_or(Error::Parse { line: None, message: "no samples".into() })?;
    SampleMatrix::new(data, ncols)
}

pub fn read_samples(path: impl AsRef<Path>) -> Result<SampleMatrix> {
    parse_samples(std::fs::File::open(path)?)
}

/// Writes `lambda,loss_recall,loss_precision` rows; infinities print as `inf`.
pub fn write_frontier_csv<W: Write>(mut w: W, curve: &FrontierCurve) -> Result<()> {
    writeln!(w, "lambda,loss_recall,loss_precision")?;
    for p in &curve.points {
        writeln!(w, "{},{},{}", p.lambda, p.loss_recall, p.loss_precision)?;
    }
    Ok(())
}

/// Writes `recall,precision` rows in ascending recall.
pub fn write_prd_csv<W: Write>(mut w: W, curve: &PrdCurve) -> Result<()> {
    writeln!(w, "recall,precision")?;
    for p in &curve.points {
        writeln!(w, "{},{}", p.recall, p.precision)?;
    }
    Ok(())
}
