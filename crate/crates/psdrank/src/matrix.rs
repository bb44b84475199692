use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Scalar field a matrix is declared over.
///
/// A `Real` matrix stores entries with imaginary part exactly zero; the tag
/// controls serialization and lets constructions promise real output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

/// Dense rectangular matrix over ℝ or ℂ, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
    field: Field,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: Field) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::ZERO; rows * cols],
            field,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n, Field::Real);
        for i in 0..n {
            m.data[i * n + i] = Complex64::ONE;
        }
        m
    }

    /// All-ones matrix J.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::ONE; rows * cols],
            field: Field::Real,
        }
    }

    pub fn from_rows_real(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged row lengths".into()));
        }
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)))
            .collect();
        Ok(Self {
            rows: r,
            cols: c,
            data,
            field: Field::Real,
        })
    }

    pub fn from_rows_complex(rows: &[Vec<Complex64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged row lengths".into()));
        }
        let data: Vec<Complex64> = rows.iter().flatten().copied().collect();
        let field = if data.iter().all(|z| z.im == 0.0) {
            Field::Real
        } else {
            Field::Complex
        };
        Ok(Self {
            rows: r,
            cols: c,
            data,
            field,
        })
    }

    pub fn from_fn_real(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(rows, cols, Field::Real);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = Complex64::new(f(i, j), 0.0);
            }
        }
        m
    }

    pub fn from_fn_complex(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Complex64,
    ) -> Self {
        let mut m = Self::zeros(rows, cols, Field::Complex);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    /// Rank-one outer product v w† (entry (i,j) = v_i · conj(w_j)).
    pub fn outer(v: &[Complex64], w: &[Complex64]) -> Self {
        let mut m = Self::zeros(v.len(), w.len(), Field::Complex);
        for (i, &vi) in v.iter().enumerate() {
            for (j, &wj) in w.iter().enumerate() {
                m.data[i * w.len() + j] = vi * wj.conj();
            }
        }
        m.refresh_field_tag();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    /// Real part of entry (i, j); the usual accessor for nonnegative data.
    pub fn re(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j].re
    }

    /// Writes entry (i, j), promoting the field tag to complex when needed.
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        if v.im != 0.0 {
            self.field = Field::Complex;
        }
        self.data[i * self.cols + j] = v;
    }

    pub fn set_re(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = Complex64::new(v, 0.0);
    }

    /// Re-derives the field tag from the stored entries.
    pub fn refresh_field_tag(&mut self) {
        self.field = if self.data.iter().all(|z| z.im == 0.0) {
            Field::Real
        } else {
            Field::Complex
        };
    }

    pub fn row(&self, i: usize) -> Vec<Complex64> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[j * self.rows + i] = self.get(i, j);
            }
        }
        m
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Self {
        let mut m = self.clone();
        for z in &mut m.data {
            *z = z.conj();
        }
        m
    }

    /// Conjugate transpose A†.
    pub fn adjoint(&self) -> Self {
        self.transpose().conjugate()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut m = self.clone();
        for (z, w) in m.data.iter_mut().zip(&other.data) {
            *z += w;
        }
        m.field = field_join(self.field, other.field);
        Ok(m)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut m = self.clone();
        for (z, w) in m.data.iter_mut().zip(&other.data) {
            *z -= w;
        }
        m.field = field_join(self.field, other.field);
        Ok(m)
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut m = self.clone();
        for z in &mut m.data {
            *z *= s;
        }
        m
    }

    pub fn scale_complex(&self, s: Complex64) -> Self {
        let mut m = self.clone();
        for z in &mut m.data {
            *z *= s;
        }
        if s.im != 0.0 {
            m.refresh_field_tag();
        }
        m
    }

    /// Matrix product A·B.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "matmul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zeros(self.rows, other.cols, field_join(self.field, other.field));
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    m.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(m)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Tr(A·B) without forming the product.
    pub fn trace_product(&self, other: &Self) -> Result<Complex64> {
        if self.cols != other.rows || self.rows != other.cols {
            return Err(Error::Dimension(format!(
                "trace_product: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut acc = Complex64::ZERO;
        for i in 0..self.rows {
            for k in 0..self.cols {
                acc += self.get(i, k) * other.get(k, i);
            }
        }
        Ok(acc)
    }

    /// Largest |A(i,j) − B(i,j)| over all entries.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_shape(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Largest deviation from Hermitian symmetry, max |A(i,j) − conj(A(j,i))|.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols.min(self.rows) {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }
}

fn field_join(a: Field, b: Field) -> Field {
    if a == Field::Real && b == Field::Real {
        Field::Real
    } else {
        Field::Complex
    }
}

/// Entrywise product a(i,j)·b(i,j); shapes must match.
pub fn hadamard_product(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::Dimension(format!(
            "hadamard: {}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let mut m = a.clone();
    for (z, w) in m.data.iter_mut().zip(&b.data) {
        *z *= w;
    }
    m.field = field_join(a.field, b.field);
    m.refresh_field_tag();
    Ok(m)
}

/// Kronecker product in standard block order: entry
/// ((i_a·r_b + i_b), (j_a·c_b + j_b)) = a(i_a, j_a) · b(i_b, j_b).
pub fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, ca, rb, cb) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut m = Matrix::zeros(ra * rb, ca * cb, field_join(a.field, b.field));
    for ia in 0..ra {
        for ja in 0..ca {
            let s = a.get(ia, ja);
            if s == Complex64::ZERO {
                continue;
            }
            for ib in 0..rb {
                for jb in 0..cb {
                    m.data[(ia * rb + ib) * (ca * cb) + (ja * cb + jb)] = s * b.get(ib, jb);
                }
            }
        }
    }
    m
}
