//! Lower bounds on PSD-rank with re-evaluable certificates.
//!
//! Every bound here is sound for any feasible certificate: a probability
//! distribution q (and a diagonal rescaling D) plugged into the closed-form
//! expression yields a valid lower bound, so optimizers only ever improve
//! the reported value, never its validity.

mod block;
mod rescale;
mod simplex;

pub use block::{block_zero_bound, BlockPartition, LeafBound};
pub use rescale::{eval_rescaled_certificate, rescaled_bound, InnerBound};
pub use simplex::{bound_b3, bound_b5, SimplexOptConfig, StepRule};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fidelity::{classical_fidelity, mutual_information_bits};
use crate::nonneg::NonnegativeMatrix;
use crate::spectral::numeric_rank;
use crate::tol::ToleranceConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    B1,
    B1Real,
    B2,
    B3,
    B4,
    B5,
    B3Rescaled,
    B4Rescaled,
    B5Rescaled,
    BlockZero,
}

impl std::fmt::Display for BoundName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BoundName::B1 => "B1",
            BoundName::B1Real => "B1'",
            BoundName::B2 => "B2",
            BoundName::B3 => "B3",
            BoundName::B4 => "B4",
            BoundName::B5 => "B5",
            BoundName::B3Rescaled => "B3'",
            BoundName::B4Rescaled => "B4'",
            BoundName::B5Rescaled => "B5'",
            BoundName::BlockZero => "block-zero",
        };
        f.write_str(s)
    }
}

/// Distributions and rescalings that witness a reported bound value.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Certificate {
    /// Column distribution (fidelity bound).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<f64>>,
    /// Per-row column distributions (combined bound).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row_q: Option<Vec<Vec<f64>>>,
    /// Diagonal row rescaling, indexed like the input rows.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct SolverStats {
    pub iterations: usize,
    pub restarts: usize,
    pub seed: u64,
}

/// One computed lower bound with its certificate and solver diagnostics.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound: BoundName,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    pub stats: SolverStats,
}

impl BoundReport {
    pub(crate) fn plain(bound: BoundName, value: f64) -> Self {
        Self {
            bound,
            value,
            certificate: None,
            stats: SolverStats::default(),
        }
    }
}

pub(crate) fn reject_zero(a: &NonnegativeMatrix) -> Result<()> {
    if a.is_zero() {
        return Err(Error::Domain("bound undefined for the zero matrix".into()));
    }
    Ok(())
}

/// sqrt(rank), valid for Hermitian PSD factorizations over ℂ.
pub fn bound_b1(a: &NonnegativeMatrix, tol: &ToleranceConfig) -> Result<BoundReport> {
    reject_zero(a)?;
    let (s, _, _) = a.strip_zero_rows_cols();
    let r = numeric_rank(s.matrix(), tol)? as f64;
    Ok(BoundReport::plain(BoundName::B1, r.sqrt()))
}

/// (sqrt(1 + 8·rank) − 1)/2, the analogue for real symmetric factors.
pub fn bound_b1_real(a: &NonnegativeMatrix, tol: &ToleranceConfig) -> Result<BoundReport> {
    reject_zero(a)?;
    let (s, _, _) = a.strip_zero_rows_cols();
    let r = numeric_rank(s.matrix(), tol)? as f64;
    Ok(BoundReport::plain(
        BoundName::B1Real,
        0.5 * ((1.0 + 8.0 * r).sqrt() - 1.0),
    ))
}

/// 2 raised to the mutual information of the normalized joint distribution.
pub fn bound_b2(a: &NonnegativeMatrix) -> Result<BoundReport> {
    reject_zero(a)?;
    let info = mutual_information_bits(a)?;
    Ok(BoundReport::plain(BoundName::B2, info.exp2()))
}

/// Sum of row maxima of the column-normalized matrix.
pub fn bound_b4(a: &NonnegativeMatrix) -> Result<BoundReport> {
    reject_zero(a)?;
    Ok(BoundReport::plain(BoundName::B4, eval_b4(a)?))
}

pub(crate) fn eval_b4(a: &NonnegativeMatrix) -> Result<f64> {
    let (s, _, _) = a.strip_zero_rows_cols();
    let p = s.column_normalized()?;
    let mut total = 0.0;
    for i in 0..p.rows() {
        let mut best = 0.0f64;
        for j in 0..p.cols() {
            best = best.max(p.get(i, j));
        }
        total += best;
    }
    Ok(total)
}

/// Squared-fidelity Gram matrix of the normalized columns:
/// G(i, j) = F(P_i, P_j)². Entrywise square of a Gram matrix, hence PSD.
pub(crate) fn fidelity_gram(a: &NonnegativeMatrix) -> Result<Vec<Vec<f64>>> {
    let (s, _, _) = a.strip_zero_rows_cols();
    let p = s.column_normalized()?;
    let cols: Vec<Vec<f64>> = (0..p.cols()).map(|j| p.column_distribution(j)).collect();
    let n = cols.len();
    let mut g = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            let f = classical_fidelity(&cols[i], &cols[j])?;
            g[i][j] = f * f;
            g[j][i] = f * f;
        }
    }
    Ok(g)
}

/// 1 / (qᵀ G q) for the fidelity Gram matrix of `a`; the certificate check
/// for the fidelity bound.
pub fn eval_b3_certificate(a: &NonnegativeMatrix, q: &[f64]) -> Result<f64> {
    let g = fidelity_gram(a)?;
    if q.len() != g.len() {
        return Err(Error::Dimension(format!(
            "certificate length {} does not match {} columns",
            q.len(),
            g.len()
        )));
    }
    check_simplex(q)?;
    let denom = quadratic_form(&g, q);
    Ok(1.0 / denom)
}

/// Sum over rows of the ratio certified by per-row distributions; the
/// certificate check for the combined bound.
pub fn eval_b5_certificates(a: &NonnegativeMatrix, row_q: &[Vec<f64>]) -> Result<f64> {
    let (s, _, _) = a.strip_zero_rows_cols();
    let p = s.column_normalized()?;
    let g = fidelity_gram(a)?;
    if row_q.len() != p.rows() {
        return Err(Error::Dimension(format!(
            "expected {} row certificates, got {}",
            p.rows(),
            row_q.len()
        )));
    }
    let mut total = 0.0;
    for (i, q) in row_q.iter().enumerate() {
        check_simplex(q)?;
        if q.len() != p.cols() {
            return Err(Error::Dimension(format!(
                "row {i} certificate length {} does not match {} columns",
                q.len(),
                p.cols()
            )));
        }
        total += b5_row_ratio(&p, &g, i, q);
    }
    Ok(total)
}

pub(crate) fn b5_row_ratio(
    p: &crate::nonneg::StochasticMatrix,
    g: &[Vec<f64>],
    row: usize,
    q: &[f64],
) -> f64 {
    let num: f64 = q.iter().enumerate().map(|(k, &w)| w * p.get(row, k)).sum();
    let denom = quadratic_form(g, q).sqrt();
    if denom == 0.0 {
        0.0
    } else {
        num / denom
    }
}

pub(crate) fn quadratic_form(g: &[Vec<f64>], q: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (i, row) in g.iter().enumerate() {
        for (j, &gij) in row.iter().enumerate() {
            acc += q[i] * q[j] * gij;
        }
    }
    acc
}

pub(crate) fn check_simplex(q: &[f64]) -> Result<()> {
    if let Some(k) = q.iter().position(|&x| x < 0.0) {
        return Err(Error::Domain(format!(
            "distribution has negative entry {} at index {k}",
            q[k]
        )));
    }
    let sum: f64 = q.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::Domain(format!(
            "distribution sums to {sum}, expected 1"
        )));
    }
    Ok(())
}
