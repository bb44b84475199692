use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numeric thresholds shared across rank detection, PSD checks, and
/// factorization verification.
///
/// The rank threshold is relative: a singular value counts toward the rank
/// when it exceeds `rank_rel_threshold` times the largest singular value.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ToleranceConfig {
    /// Relative cutoff for numeric rank (fraction of the top singular value).
    pub rank_rel_threshold: f64,
    /// Most negative eigenvalue still accepted as "zero" in PSD checks.
    pub psd_eig_floor: f64,
    /// Absolute tolerance for entrywise verification of factorizations.
    pub verify_abs_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            rank_rel_threshold: 1e-10,
            psd_eig_floor: -1e-9,
            verify_abs_tol: 1e-9,
        }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rank_rel_threshold > 0.0 && self.rank_rel_threshold < 1.0) {
            return Err(Error::Domain(format!(
                "rank_rel_threshold must lie in (0, 1), got {}",
                self.rank_rel_threshold
            )));
        }
        if !(self.psd_eig_floor < 0.0) {
            return Err(Error::Domain(format!(
                "psd_eig_floor must be a strictly negative floor, got {}",
                self.psd_eig_floor
            )));
        }
        if !(self.verify_abs_tol > 0.0) {
            return Err(Error::Domain(format!(
                "verify_abs_tol must be strictly positive, got {}",
                self.verify_abs_tol
            )));
        }
        Ok(())
    }
}
