use crate::error::{Error, Result};
use crate::matrix::{Field, Matrix};

/// Entrywise-nonnegative real matrix; the carrier for every bound input.
#[derive(Debug, Clone, PartialEq)]
pub struct NonnegativeMatrix {
    base: Matrix,
}

impl NonnegativeMatrix {
    pub fn new(base: Matrix) -> Result<Self> {
        if base.field() != Field::Real {
            return Err(Error::Domain(
                "nonnegative matrix must be real-valued".into(),
            ));
        }
        for i in 0..base.rows() {
            for j in 0..base.cols() {
                if base.re(i, j) < 0.0 {
                    return Err(Error::Domain(format!(
                        "negative entry {} at ({i}, {j})",
                        base.re(i, j)
                    )));
                }
            }
        }
        Ok(Self { base })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::new(Matrix::from_rows_real(rows)?)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.base
    }

    pub fn into_matrix(self) -> Matrix {
        self.base
    }

    pub fn rows(&self) -> usize {
        self.base.rows()
    }

    pub fn cols(&self) -> usize {
        self.base.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.base.re(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.base.max_abs_entry() == 0.0
    }

    pub fn column_sums(&self) -> Vec<f64> {
        (0..self.cols())
            .map(|j| (0..self.rows()).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// Entrywise square root, still nonnegative.
    pub fn entrywise_sqrt(&self) -> NonnegativeMatrix {
        let m = Matrix::from_fn_real(self.rows(), self.cols(), |i, j| self.get(i, j).sqrt());
        NonnegativeMatrix { base: m }
    }

    /// Removes all-zero rows and columns, which leave the PSD-rank unchanged.
    /// Returns the stripped matrix plus the surviving row/column indices.
    pub fn strip_zero_rows_cols(&self) -> (NonnegativeMatrix, Vec<usize>, Vec<usize>) {
        let rows: Vec<usize> = (0..self.rows())
            .filter(|&i| (0..self.cols()).any(|j| self.get(i, j) != 0.0))
            .collect();
        let cols: Vec<usize> = (0..self.cols())
            .filter(|&j| (0..self.rows()).any(|i| self.get(i, j) != 0.0))
            .collect();
        let m = Matrix::from_fn_real(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]));
        (NonnegativeMatrix { base: m }, rows, cols)
    }

    /// Rescales every column to unit sum. Errors when a column is all zero;
    /// strip first if that is expected.
    pub fn column_normalized(&self) -> Result<StochasticMatrix> {
        let sums = self.column_sums();
        if let Some(j) = sums.iter().position(|&s| s <= 0.0) {
            return Err(Error::Domain(format!(
                "column {j} sums to zero; cannot normalize"
            )));
        }
        let m = Matrix::from_fn_real(self.rows(), self.cols(), |i, j| self.get(i, j) / sums[j]);
        Ok(StochasticMatrix {
            base: NonnegativeMatrix { base: m },
        })
    }

    /// Scales row `i` by `d[i]` (entries must be nonnegative).
    pub fn row_scaled(&self, d: &[f64]) -> Result<NonnegativeMatrix> {
        if d.len() != self.rows() {
            return Err(Error::Dimension(format!(
                "diagonal length {} does not match {} rows",
                d.len(),
                self.rows()
            )));
        }
        if let Some(i) = d.iter().position(|&x| x < 0.0) {
            return Err(Error::Domain(format!("negative rescaling entry at row {i}")));
        }
        let m = Matrix::from_fn_real(self.rows(), self.cols(), |i, j| d[i] * self.get(i, j));
        Ok(NonnegativeMatrix { base: m })
    }
}

const COLUMN_SUM_TOL: f64 = 1e-12;

/// Nonnegative matrix with unit column sums.
#[derive(Debug, Clone, PartialEq)]
pub struct StochasticMatrix {
    base: NonnegativeMatrix,
}

impl StochasticMatrix {
    pub fn new(base: NonnegativeMatrix) -> Result<Self> {
        for (j, s) in base.column_sums().iter().enumerate() {
            if (s - 1.0).abs() > COLUMN_SUM_TOL {
                return Err(Error::Domain(format!(
                    "column {j} sums to {s}, expected 1"
                )));
            }
        }
        Ok(Self { base })
    }

    pub fn nonneg(&self) -> &NonnegativeMatrix {
        &self.base
    }

    pub fn matrix(&self) -> &Matrix {
        self.base.matrix()
    }

    pub fn rows(&self) -> usize {
        self.base.rows()
    }

    pub fn cols(&self) -> usize {
        self.base.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.base.get(i, j)
    }

    /// Column `j` as a probability distribution.
    pub fn column_distribution(&self, j: usize) -> Vec<f64> {
        (0..self.rows()).map(|i| self.get(i, j)).collect()
    }
}
