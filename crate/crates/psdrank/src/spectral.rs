//! Singular-value based quantities: numeric rank, trace and Frobenius norms,
//! the trace-norm rank bound, and the PSD test.

use crate::eigen::hermitian_eigenvalues;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::svd::svd;
use crate::tol::ToleranceConfig;

/// Singular values of `m`, descending; length is min(rows, cols).
pub fn singular_values(m: &Matrix) -> Result<Vec<f64>> {
    if m.is_empty() {
        return Err(Error::Dimension("singular values of an empty matrix".into()));
    }
    Ok(svd(m)?.sigma)
}

/// Number of singular values exceeding `rank_rel_threshold` times the
/// largest one. The zero matrix has rank 0.
pub fn numeric_rank(m: &Matrix, tol: &ToleranceConfig) -> Result<usize> {
    let sv = singular_values(m)?;
    let top = sv[0];
    if top == 0.0 {
        return Ok(0);
    }
    Ok(sv.iter().filter(|&&s| s > tol.rank_rel_threshold * top).count())
}

/// Sum of singular values.
pub fn trace_norm(m: &Matrix) -> Result<f64> {
    Ok(singular_values(m)?.iter().sum())
}

/// Square root of the sum of squared singular values.
pub fn frobenius_norm(m: &Matrix) -> Result<f64> {
    Ok(singular_values(m)?
        .iter()
        .map(|s| s * s)
        .sum::<f64>()
        .sqrt())
}

/// Cauchy-Schwarz rank bound (trace norm / Frobenius norm)²; at most the
/// rank of the matrix.
pub fn trace_norm_rank_bound(m: &Matrix) -> Result<f64> {
    let sv = singular_values(m)?;
    let tn: f64 = sv.iter().sum();
    let fro = sv.iter().map(|s| s * s).sum::<f64>().sqrt();
    if fro == 0.0 {
        return Err(Error::Domain(
            "trace-norm rank bound is undefined for the zero matrix".into(),
        ));
    }
    Ok((tn / fro).powi(2))
}

/// Outcome of a PSD test: the verdict plus the minimum eigenvalue as witness.
#[derive(Debug, Clone, Copy)]
pub struct PsdCheck {
    pub is_psd: bool,
    pub min_eigenvalue: f64,
    pub hermitian_defect: f64,
}

/// True when `m` is Hermitian within `verify_abs_tol` and its minimum
/// eigenvalue clears `psd_eig_floor`. The witness is reported either way.
pub fn is_psd(m: &Matrix, tol: &ToleranceConfig) -> Result<PsdCheck> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "PSD test needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let defect = m.hermitian_defect();
    let vals = hermitian_eigenvalues(m)?;
    let min = vals.last().copied().unwrap_or(0.0);
    Ok(PsdCheck {
        is_psd: defect <= tol.verify_abs_tol && min >= tol.psd_eig_floor,
        min_eigenvalue: min,
        hermitian_defect: defect,
    })
}
