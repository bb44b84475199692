//! Factorizations through a Hadamard root: any matrix M with M ∘ M̄ = A
//! yields a PSD factorization of A of size rank(M). Phase balancing turns
//! the entrywise square root of a suitable A into such an M with zero
//! column sums, dropping the size below the row count.

use num_complex::Complex64;

use super::{phase_balance, rank_for_root, PsdFactorization};
use crate::error::{Error, Result};
use crate::families::column_has_no_dominant_entry;
use crate::matrix::Matrix;
use crate::nonneg::NonnegativeMatrix;
use crate::svd::svd;
use crate::tol::ToleranceConfig;

/// Size-rank(M) PSD factorization of M ∘ M̄ from a truncated SVD rank
/// factorization M = U·W: the factors are rank-one outer products built
/// from the rows of U and columns of W.
pub fn hadamard_root_factorization(
    m: &Matrix,
    tol: &ToleranceConfig,
) -> Result<PsdFactorization> {
    if m.is_empty() {
        return Err(Error::Dimension("empty matrix".into()));
    }
    let r = rank_for_root(m, tol)?;
    if r == 0 {
        return Err(Error::Domain(
            "zero matrix has no Hadamard-root factorization".into(),
        ));
    }
    let decomposition = svd(m)?;
    let (rows, cols) = (m.rows(), m.cols());

    // M(i,j) = Σ_k U(i,k)·σ_k·conj(V(j,k)); with a_i the i-th row of U and
    // b_j the σ-scaled conjugated j-th row of V, Tr(E_i F_j) = |a_iᵀ b_j|².
    let mut e_factors = Vec::with_capacity(rows);
    for i in 0..rows {
        let a_conj: Vec<Complex64> = (0..r).map(|k| decomposition.u.get(i, k).conj()).collect();
        e_factors.push(Matrix::outer(&a_conj, &a_conj));
    }
    let mut f_factors = Vec::with_capacity(cols);
    for j in 0..cols {
        let b: Vec<Complex64> = (0..r)
            .map(|k| decomposition.sigma[k] * decomposition.v.get(j, k).conj())
            .collect();
        f_factors.push(Matrix::outer(&b, &b));
    }
    PsdFactorization::new(e_factors, f_factors)
}

/// Factorization of `a` with size below its row count, available whenever no
/// column of the entrywise square root has a dominant entry: balancing each
/// column's phases makes the root's columns sum to zero, so its rank drops.
pub fn not_full_factorization(
    a: &NonnegativeMatrix,
    tol: &ToleranceConfig,
) -> Result<PsdFactorization> {
    let root = a.entrywise_sqrt();
    for j in 0..root.cols() {
        let col: Vec<f64> = (0..root.rows()).map(|i| root.get(i, j)).collect();
        if !column_has_no_dominant_entry(&col) {
            return Err(Error::Precondition(format!(
                "column {j} of the entrywise square root has a dominant entry"
            )));
        }
    }
    let mut m = Matrix::zeros(a.rows(), a.cols(), crate::matrix::Field::Complex);
    for j in 0..root.cols() {
        let col: Vec<f64> = (0..root.rows()).map(|i| root.get(i, j)).collect();
        let phases = phase_balance(&col)?;
        for i in 0..root.rows() {
            m.set(i, j, Complex64::from_polar(col[i], phases.thetas[i]));
        }
    }
    hadamard_root_factorization(&m, tol)
}
