//! Hermitian eigendecomposition by the cyclic complex Jacobi method.
//!
//! Sizes in this crate are small (factors rarely exceed 64×64), so Jacobi's
//! simplicity and determinism win over asymptotically faster reductions.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{Field, Matrix};

/// Eigenpairs of a Hermitian matrix: `values[k]` belongs to column `k` of
/// `vectors`, sorted descending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

const JACOBI_EPS: f64 = 1e-15;
const MAX_SWEEPS: usize = 64;

/// Diagonalizes (A + A†)/2. The symmetrization absorbs round-off from
/// callers that build Hermitian matrices entry by entry.
pub fn hermitian_eigen(a: &Matrix) -> Result<HermitianEigen> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "hermitian_eigen needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut h = Matrix::from_fn_complex(n, n, |i, j| 0.5 * (a.get(i, j) + a.get(j, i).conj()));
    let mut v = complexified_identity(n);

    let scale = h.max_abs_entry().max(1.0);
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let hpq = h.get(p, q);
                if hpq.norm() <= JACOBI_EPS * scale {
                    continue;
                }
                rotated = true;
                let (c, s, phase) = rotation_for(h.re(p, p), h.re(q, q), hpq);
                apply_two_sided(&mut h, p, q, c, s, phase);
                apply_right(&mut v, p, q, c, s, phase);
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| h.re(i, i)).collect();
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let vectors = Matrix::from_fn_complex(n, n, |i, k| v.get(i, order[k]));
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues only, descending.
pub fn hermitian_eigenvalues(a: &Matrix) -> Result<Vec<f64>> {
    Ok(hermitian_eigen(a)?.values)
}

/// PSD square root via eigendecomposition, clipping eigenvalues in
/// [eig_floor, 0) to zero. More negative spectra are rejected.
pub fn psd_sqrt(a: &Matrix, eig_floor: f64) -> Result<Matrix> {
    let eig = hermitian_eigen(a)?;
    let scale = eig.values.iter().fold(0.0f64, |m, &x| m.max(x.abs())).max(1.0);
    let n = a.rows();
    let mut roots = Vec::with_capacity(n);
    for &lambda in &eig.values {
        if lambda < eig_floor * scale {
            return Err(Error::Domain(format!(
                "matrix is not PSD: eigenvalue {lambda:.3e} below floor"
            )));
        }
        roots.push(lambda.max(0.0).sqrt());
    }
    // V diag(sqrt λ) V†
    let v = &eig.vectors;
    let mut out = Matrix::zeros(n, n, Field::Complex);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex64::ZERO;
            for (k, &r) in roots.iter().enumerate() {
                acc += v.get(i, k) * r * v.get(j, k).conj();
            }
            out.set(i, j, acc);
        }
    }
    out.refresh_field_tag();
    Ok(out)
}

fn complexified_identity(n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n, Field::Complex);
    for i in 0..n {
        m.set(i, i, Complex64::ONE);
    }
    m
}

/// Jacobi parameters (c, s, e^{iφ}) zeroing the (p,q) entry of the
/// Hermitian 2×2 block [[α, h],[h̄, β]] with h = |h|·e^{iφ}.
fn rotation_for(alpha: f64, beta: f64, h: Complex64) -> (f64, f64, Complex64) {
    let mag = h.norm();
    let phase = h / mag;
    let tau = (beta - alpha) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    (c, t * c, phase)
}

/// H ← R† H R for the plane rotation R(p,p)=c, R(p,q)=s·e^{iφ},
/// R(q,p)=−s·e^{−iφ}, R(q,q)=c.
fn apply_two_sided(h: &mut Matrix, p: usize, q: usize, c: f64, s: f64, phase: Complex64) {
    apply_right(h, p, q, c, s, phase);
    // Left action by R† mirrors the column update on rows, conjugated.
    let n = h.cols();
    for k in 0..n {
        let hp = h.get(p, k);
        let hq = h.get(q, k);
        h.set(p, k, c * hp - s * phase * hq);
        h.set(q, k, s * phase.conj() * hp + c * hq);
    }
}

/// M ← M·R (columns p and q recombined).
fn apply_right(m: &mut Matrix, p: usize, q: usize, c: f64, s: f64, phase: Complex64) {
    let rows = m.rows();
    for k in 0..rows {
        let mp = m.get(k, p);
        let mq = m.get(k, q);
        m.set(k, p, c * mp - s * phase.conj() * mq);
        m.set(k, q, s * phase * mp + c * mq);
    }
}
