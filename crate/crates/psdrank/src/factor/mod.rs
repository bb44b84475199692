//! Explicit PSD factorizations: verification, POVM normal form, tensor
//! products, and the complex-to-real doubling.

mod approx_identity;
mod hadamard_root;
mod inner_product;
mod nonequality;
mod phase;
mod random_code;

pub use approx_identity::mc_factorization;
pub use hadamard_root::{hadamard_root_factorization, not_full_factorization};
pub use inner_product::ip_sign_matrix;
pub use nonequality::{ne_factorization_even, ne_factorization_odd};
pub use phase::{phase_balance, PhaseAssignment};
pub use random_code::{random_code_nonneg_factorization, NonnegCodeFactorization};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::eigen::hermitian_eigenvalues;
use crate::error::{Error, Result};
use crate::matrix::{kronecker, Field, Matrix};
use crate::nonneg::{NonnegativeMatrix, StochasticMatrix};
use crate::spectral::numeric_rank;
use crate::tol::ToleranceConfig;

/// A size-r PSD factorization: one r×r PSD factor per row (E side) and per
/// column (F side) of the target, realizing A(i,j) = Tr(E_i F_j).
#[derive(Debug, Clone)]
pub struct PsdFactorization {
    size: usize,
    e_factors: Vec<Matrix>,
    f_factors: Vec<Matrix>,
    field: Field,
}

impl PsdFactorization {
    pub fn new(e_factors: Vec<Matrix>, f_factors: Vec<Matrix>) -> Result<Self> {
        let size = e_factors
            .first()
            .or_else(|| f_factors.first())
            .map(Matrix::rows)
            .ok_or_else(|| Error::Dimension("factorization needs at least one factor".into()))?;
        for m in e_factors.iter().chain(&f_factors) {
            if m.rows() != size || m.cols() != size {
                return Err(Error::Dimension(format!(
                    "factor is {}x{}, expected {size}x{size}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let field = if e_factors
            .iter()
            .chain(&f_factors)
            .all(|m| m.field() == Field::Real)
        {
            Field::Real
        } else {
            Field::Complex
        };
        Ok(Self {
            size,
            e_factors,
            f_factors,
            field,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn e_factors(&self) -> &[Matrix] {
        &self.e_factors
    }

    pub fn f_factors(&self) -> &[Matrix] {
        &self.f_factors
    }

    /// The matrix realized by this factorization, entry (i,j) = Tr(E_i F_j).
    pub fn realized_matrix(&self) -> Result<Matrix> {
        let mut m = Matrix::zeros(self.e_factors.len(), self.f_factors.len(), Field::Real);
        for (i, e) in self.e_factors.iter().enumerate() {
            for (j, f) in self.f_factors.iter().enumerate() {
                m.set(i, j, e.trace_product(f)?);
            }
        }
        m.refresh_field_tag();
        Ok(m)
    }
}

/// Minimum eigenvalue of one factor, the PSD witness.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct FactorWitness {
    pub e_side: bool,
    pub index: usize,
    pub min_eigenvalue: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    /// max over (i,j) of |Tr(E_i F_j) − A(i,j)|.
    pub max_abs_error: f64,
    pub witnesses: Vec<FactorWitness>,
    pub all_psd: bool,
}

impl VerifyReport {
    pub fn passes(&self, tol: &ToleranceConfig) -> bool {
        self.max_abs_error <= tol.verify_abs_tol && self.all_psd
    }
}

/// Checks a factorization against its target entrywise and flags non-PSD
/// factors by their minimum eigenvalue.
pub fn verify(
    fact: &PsdFactorization,
    target: &NonnegativeMatrix,
    tol: &ToleranceConfig,
) -> Result<VerifyReport> {
    if fact.e_factors.len() != target.rows() || fact.f_factors.len() != target.cols() {
        return Err(Error::Dimension(format!(
            "factor counts {}x{} do not match target {}x{}",
            fact.e_factors.len(),
            fact.f_factors.len(),
            target.rows(),
            target.cols()
        )));
    }
    let mut max_err = 0.0f64;
    for (i, e) in fact.e_factors.iter().enumerate() {
        for (j, f) in fact.f_factors.iter().enumerate() {
            let t = e.trace_product(f)?;
            let err = (t - Complex64::new(target.get(i, j), 0.0)).norm();
            max_err = max_err.max(err);
        }
    }
    let mut witnesses = Vec::with_capacity(fact.e_factors.len() + fact.f_factors.len());
    let mut all_psd = true;
    for (e_side, factors) in [(true, &fact.e_factors), (false, &fact.f_factors)] {
        for (index, m) in factors.iter().enumerate() {
            let vals = hermitian_eigenvalues(m)?;
            let min = vals.last().copied().unwrap_or(0.0);
            if min < tol.psd_eig_floor || m.hermitian_defect() > tol.verify_abs_tol {
                all_psd = false;
            }
            witnesses.push(FactorWitness {
                e_side,
                index,
                min_eigenvalue: min,
            });
        }
    }
    Ok(VerifyReport {
        max_abs_error: max_err,
        witnesses,
        all_psd,
    })
}

/// Tensor product factorization: factors C_i ⊗ E_k and D_j ⊗ F_l realize the
/// Kronecker product of the two targets, with size r₁·r₂.
pub fn tensor_factorization(
    f1: &PsdFactorization,
    f2: &PsdFactorization,
) -> Result<PsdFactorization> {
    let e: Vec<Matrix> = f1
        .e_factors
        .iter()
        .flat_map(|c| f2.e_factors.iter().map(move |e| kronecker(c, e)))
        .collect();
    let f: Vec<Matrix> = f1
        .f_factors
        .iter()
        .flat_map(|d| f2.f_factors.iter().map(move |g| kronecker(d, g)))
        .collect();
    PsdFactorization::new(e, f)
}

/// Doubles a complex Hermitian factorization into a real symmetric one of
/// size 2r: each factor C + iD becomes (1/sqrt 2)·[[C, D], [−D, C]].
pub fn realify(fact: &PsdFactorization) -> Result<PsdFactorization> {
    let doubled = |m: &Matrix| -> Matrix {
        let r = m.rows();
        let scale = 0.5f64.sqrt();
        Matrix::from_fn_real(2 * r, 2 * r, |i, j| {
            let (bi, ii) = (i / r, i % r);
            let (bj, jj) = (j / r, j % r);
            let z = m.get(ii, jj);
            scale
                * match (bi, bj) {
                    (0, 0) | (1, 1) => z.re,
                    (0, 1) => z.im,
                    _ => -z.im,
                }
        })
    };
    let e = fact.e_factors.iter().map(doubled).collect();
    let f = fact.f_factors.iter().map(doubled).collect();
    PsdFactorization::new(e, f)
}

/// Result of POVM normalization; `compressed_from` records a support
/// compression if the E-side sum was singular.
#[derive(Debug, Clone)]
pub struct PovmNormalForm {
    pub factorization: PsdFactorization,
    pub compressed_from: Option<usize>,
}

/// Rewrites a verifying factorization of a stochastic target so the E side
/// sums to the identity and every F factor has unit trace, preserving all
/// realized entries. A singular E-side sum is compressed to its support
/// first (shrinking the size), then normalized.
pub fn normalize_to_povm_form(
    fact: &PsdFactorization,
    target: &StochasticMatrix,
    tol: &ToleranceConfig,
) -> Result<PovmNormalForm> {
    let target_nonneg = NonnegativeMatrix::new(target.matrix().clone())?;
    let report = verify(fact, &target_nonneg, tol)?;
    if report.max_abs_error > tol.verify_abs_tol.max(1e-8) {
        return Err(Error::Precondition(format!(
            "factorization does not verify its target (max error {:.3e})",
            report.max_abs_error
        )));
    }

    let r = fact.size;
    let mut sum = Matrix::zeros(r, r, Field::Complex);
    for e in &fact.e_factors {
        sum = sum.add(e)?;
    }
    let eig = crate::eigen::hermitian_eigen(&sum)?;
    let top = eig.values.first().copied().unwrap_or(0.0);
    if top <= 0.0 {
        return Err(Error::Domain("E-side sum is zero".into()));
    }
    let support = eig
        .values
        .iter()
        .filter(|&&l| l > tol.rank_rel_threshold * top)
        .count();

    // In the eigenbasis of the sum, every factor is supported on the leading
    // `support` coordinates, so restricting preserves all trace products.
    let restrict = |m: &Matrix| -> Matrix {
        Matrix::from_fn_complex(support, support, |a, b| {
            let mut acc = Complex64::ZERO;
            for i in 0..r {
                for j in 0..r {
                    acc += eig.vectors.get(i, a).conj() * m.get(i, j) * eig.vectors.get(j, b);
                }
            }
            acc
        })
    };
    let lambda = &eig.values[..support];
    let e_factors: Vec<Matrix> = fact
        .e_factors
        .iter()
        .map(|m| {
            let c = restrict(m);
            Matrix::from_fn_complex(support, support, |a, b| {
                c.get(a, b) / (lambda[a].sqrt() * lambda[b].sqrt())
            })
        })
        .collect();
    let f_factors: Vec<Matrix> = fact
        .f_factors
        .iter()
        .map(|m| {
            let c = restrict(m);
            Matrix::from_fn_complex(support, support, |a, b| {
                c.get(a, b) * (lambda[a].sqrt() * lambda[b].sqrt())
            })
        })
        .collect();

    let factorization = PsdFactorization::new(e_factors, f_factors)?;
    Ok(PovmNormalForm {
        compressed_from: (support < r).then_some(r),
        factorization,
    })
}

/// Smallest factorization size consistent with a rank factorization of the
/// Hadamard root; shared by the root-based constructions.
pub(crate) fn rank_for_root(m: &Matrix, tol: &ToleranceConfig) -> Result<usize> {
    numeric_rank(m, tol)
}
