use crate::eigen::hermitian_eigenvalues;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

const HERMITIAN_TOL: f64 = 1e-12;
const EIG_FLOOR: f64 = -1e-10;
const TRACE_TOL: f64 = 1e-10;

/// Quantum state: square PSD matrix with unit trace.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    base: Matrix,
}

impl DensityMatrix {
    pub fn new(base: Matrix) -> Result<Self> {
        if !base.is_square() {
            return Err(Error::Dimension(format!(
                "density matrix must be square, got {}x{}",
                base.rows(),
                base.cols()
            )));
        }
        let defect = base.hermitian_defect();
        if defect > HERMITIAN_TOL {
            return Err(Error::Domain(format!(
                "density matrix is not Hermitian (defect {defect:.3e})"
            )));
        }
        let vals = hermitian_eigenvalues(&base)?;
        if let Some(&min) = vals.last() {
            if min < EIG_FLOOR {
                return Err(Error::Domain(format!(
                    "density matrix has negative eigenvalue {min:.3e}"
                )));
            }
        }
        let tr = base.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::Domain(format!("density matrix trace is {tr}, expected 1")));
        }
        Ok(Self { base })
    }

    /// diag(p) for a probability vector p.
    pub fn from_distribution(p: &[f64]) -> Result<Self> {
        let n = p.len();
        let m = Matrix::from_fn_real(n, n, |i, j| if i == j { p[i] } else { 0.0 });
        Self::new(m)
    }

    /// |psi><psi| for a (normalized) state vector.
    pub fn from_pure_state(psi: &[num_complex::Complex64]) -> Result<Self> {
        Self::new(Matrix::outer(psi, psi))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.rows()
    }
}
