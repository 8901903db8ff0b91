use crate::error::{Error, Result};

/// `n × d` matrix of finite reals stored row-major, one sample per row.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleMatrix {
    data: Vec<f64>,
    ncols: usize,
}

impl SampleMatrix {
    pub fn new(data: Vec<f64>, ncols: usize) -> Result<Self> {
        if ncols == 0 || data.is_empty() {
            return Err(Error::InsufficientData { needed: 1, found: 0 });
        }
        if !data.len().is_multiple_of(ncols) {
            return Err(Error::InvalidParameter(format!(
                "{} values do not fill rows of length {ncols}",
                data.len()
            )));
        }
        if let Some(pos) = data.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "non-finite entry in row {}, column {}",
                pos / ncols,
                pos % ncols
            )));
        }
        Ok(SampleMatrix { data, ncols })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for r in rows {
            crate::error::ensure_same_dim(ncols, r.as_ref().len())?;
            data.extend_from_slice(r.as_ref());
        }
        SampleMatrix::new(data, ncols)
    }

    /// One-dimensional samples.
    pub fn from_column(values: Vec<f64>) -> Result<Self> {
        SampleMatrix::new(values, 1)
    }

    pub fn nrows(&self) -> usize {
        self.data.len() / self.ncols
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> std::slice::ChunksExact<'_, f64> {
        self.data.chunks_exact(self.ncols)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &SampleMatrix) -> Result<SampleMatrix> {
        crate::error::ensure_same_dim(self.ncols, other.ncols)?;
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(SampleMatrix { data, ncols: self.ncols })
    }
}

pub(crate) fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}
