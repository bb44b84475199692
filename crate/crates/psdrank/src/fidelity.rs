//! Fidelity between distributions and quantum states, plus the mutual
//! information that feeds the entropy-based bound.

use crate::density::DensityMatrix;
use crate::eigen::psd_sqrt;
use crate::error::{Error, Result};
use crate::nonneg::NonnegativeMatrix;
use crate::spectral::trace_norm;

const DIST_SUM_TOL: f64 = 1e-10;

fn check_distribution(name: &str, p: &[f64]) -> Result<()> {
    if let Some(k) = p.iter().position(|&x| x < 0.0) {
        return Err(Error::Domain(format!(
            "{name} has negative entry {} at index {k}",
            p[k]
        )));
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > DIST_SUM_TOL {
        return Err(Error::Domain(format!("{name} sums to {sum}, expected 1")));
    }
    Ok(())
}

/// Bhattacharyya coefficient Σ_k sqrt(p_k q_k); equals the quantum fidelity
/// of the two diagonal states diag(p), diag(q).
pub fn classical_fidelity(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::Dimension(format!(
            "distribution lengths differ: {} vs {}",
            p.len(),
            q.len()
        )));
    }
    check_distribution("p", p)?;
    check_distribution("q", q)?;
    Ok(p.iter().zip(q).map(|(&a, &b)| (a * b).sqrt()).sum())
}

/// Fidelity F(rho, sigma) = trace norm of sqrt(sigma)·sqrt(rho).
pub fn quantum_fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::Dimension(format!(
            "state dimensions differ: {} vs {}",
            rho.dim(),
            sigma.dim()
        )));
    }
    let sr = psd_sqrt(rho.matrix(), -1e-9)?;
    let ss = psd_sqrt(sigma.matrix(), -1e-9)?;
    let prod = ss.matmul(&sr)?;
    // Round-off can push the value a hair past 1 for identical states.
    Ok(trace_norm(&prod)?.min(1.0))
}

/// Mutual information in bits of the joint distribution obtained by
/// normalizing `p` to total mass one. Zero cells contribute zero.
pub fn mutual_information_bits(p: &NonnegativeMatrix) -> Result<f64> {
    let total: f64 = (0..p.rows())
        .flat_map(|i| (0..p.cols()).map(move |j| (i, j)))
        .map(|(i, j)| p.get(i, j))
        .sum();
    if total <= 0.0 {
        return Err(Error::Domain(
            "mutual information of the all-zero matrix is undefined".into(),
        ));
    }
    let rows = p.rows();
    let cols = p.cols();
    let mut row_marginal = vec![0.0; rows];
    let mut col_marginal = vec![0.0; cols];
    for i in 0..rows {
        for j in 0..cols {
            let v = p.get(i, j) / total;
            row_marginal[i] += v;
            col_marginal[j] += v;
        }
    }
    let mut info = 0.0;
    for i in 0..rows {
        for j in 0..cols {
            let v = p.get(i, j) / total;
            if v > 0.0 {
                info += v * (v / (row_marginal[i] * col_marginal[j])).log2();
            }
        }
    }
    Ok(info.max(0.0))
}
