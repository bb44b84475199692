//! Additive bound from a zero block: when the lower-right block of
//! [[B, C], [D, 0]] vanishes, the PSD-rank is at least
//! prank(C) + prank(D). The split recurses through sub-blocks with the same
//! shape, which pins the disjointness family exactly.

use serde::{Deserialize, Serialize};

use super::{bound_b1, bound_b2, bound_b3, bound_b4, BoundName, BoundReport, SolverStats};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::nonneg::NonnegativeMatrix;
use crate::tol::ToleranceConfig;
use crate::bounds::SimplexOptConfig;

const ZERO_BLOCK_TOL: f64 = 1e-12;

/// Row/column split: rows `0..row_split` form the top blocks, columns
/// `0..col_split` the left blocks.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BlockPartition {
    pub row_split: usize,
    pub col_split: usize,
}

/// Bound applied to the blocks once recursion bottoms out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LeafBound {
    B1,
    B2,
    B3,
    B4,
}

pub fn block_zero_bound(
    a: &NonnegativeMatrix,
    partition: BlockPartition,
    leaf: LeafBound,
    tol: &ToleranceConfig,
) -> Result<BoundReport> {
    let (k, l) = (partition.row_split, partition.col_split);
    if k == 0 || k >= a.rows() || l == 0 || l >= a.cols() {
        return Err(Error::Dimension(format!(
            "partition ({k}, {l}) out of range for {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let worst = max_entry_in(a, k..a.rows(), l..a.cols());
    if worst > ZERO_BLOCK_TOL {
        return Err(Error::Precondition(format!(
            "lower-right block is not zero (max entry {worst:.3e})"
        )));
    }
    let upper_right = submatrix(a, 0..k, l..a.cols());
    let lower_left = submatrix(a, k..a.rows(), 0..l);
    let value = recurse(&upper_right, leaf, tol)? + recurse(&lower_left, leaf, tol)?;
    Ok(BoundReport {
        bound: BoundName::BlockZero,
        value,
        certificate: None,
        stats: SolverStats::default(),
    })
}

/// Splits at the half point whenever that again exposes a zero lower-right
/// block; otherwise evaluates the leaf bound. All-zero blocks contribute 0.
fn recurse(a: &NonnegativeMatrix, leaf: LeafBound, tol: &ToleranceConfig) -> Result<f64> {
    if a.is_zero() {
        return Ok(0.0);
    }
    let (rows, cols) = (a.rows(), a.cols());
    if rows >= 2 && cols >= 2 && rows % 2 == 0 && cols % 2 == 0 {
        let (k, l) = (rows / 2, cols / 2);
        if max_entry_in(a, k..rows, l..cols) <= ZERO_BLOCK_TOL {
            let upper_right = submatrix(a, 0..k, l..cols);
            let lower_left = submatrix(a, k..rows, 0..l);
            return Ok(recurse(&upper_right, leaf, tol)? + recurse(&lower_left, leaf, tol)?);
        }
    }
    leaf_value(a, leaf, tol)
}

fn leaf_value(a: &NonnegativeMatrix, leaf: LeafBound, tol: &ToleranceConfig) -> Result<f64> {
    Ok(match leaf {
        LeafBound::B1 => bound_b1(a, tol)?.value,
        LeafBound::B2 => bound_b2(a)?.value,
        LeafBound::B3 => bound_b3(a, &SimplexOptConfig::default(), None)?.value,
        LeafBound::B4 => bound_b4(a)?.value,
    })
}

fn max_entry_in(
    a: &NonnegativeMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> f64 {
    let mut worst = 0.0f64;
    for i in rows {
        for j in cols.clone() {
            worst = worst.max(a.get(i, j));
        }
    }
    worst
}

fn submatrix(
    a: &NonnegativeMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> NonnegativeMatrix {
    let m = Matrix::from_fn_real(rows.len(), cols.len(), |i, j| {
        a.get(rows.start + i, cols.start + j)
    });
    NonnegativeMatrix::new(m).expect("submatrix of a nonnegative matrix")
}
