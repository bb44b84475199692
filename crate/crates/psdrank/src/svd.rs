//! Singular value decomposition by one-sided Jacobi column orthogonalization.
//!
//! One-sided Jacobi computes small singular values to high relative accuracy,
//! which matters here because numeric rank uses a relative cutoff of 1e-10.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{Field, Matrix};

/// Thin SVD `A = U · diag(sigma) · V†` with `k = min(rows, cols)` columns in
/// `u` and `v`; `sigma` is sorted descending. Columns of `u` matching a zero
/// singular value are left as zero vectors.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: Matrix,
    pub sigma: Vec<f64>,
    pub v: Matrix,
}

const JACOBI_EPS: f64 = 1e-15;
const MAX_SWEEPS: usize = 64;

pub fn svd(a: &Matrix) -> Result<Svd> {
    if a.is_empty() {
        return Err(Error::Dimension("svd of an empty matrix".into()));
    }
    if a.rows() < a.cols() {
        let t = svd(&a.adjoint())?;
        return Ok(Svd {
            u: t.v,
            sigma: t.sigma,
            v: t.u,
        });
    }

    let (m, n) = (a.rows(), a.cols());
    let mut b = a.clone();
    let mut v = Matrix::zeros(n, n, Field::Complex);
    for i in 0..n {
        v.set(i, i, Complex64::ONE);
    }

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = Complex64::ZERO;
                for k in 0..m {
                    let bp = b.get(k, p);
                    let bq = b.get(k, q);
                    alpha += bp.norm_sqr();
                    beta += bq.norm_sqr();
                    gamma += bp.conj() * bq;
                }
                if gamma.norm() <= JACOBI_EPS * (alpha * beta).sqrt() || gamma.norm() == 0.0 {
                    continue;
                }
                rotated = true;
                let mag = gamma.norm();
                let phase = gamma / mag;
                let tau = (beta - alpha) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                rotate_columns(&mut b, p, q, c, s, phase);
                rotate_columns(&mut v, p, q, c, s, phase);
            }
        }
        if !rotated {
            break;
        }
    }

    // Column norms are the singular values; sort descending.
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = (0..n)
        .map(|j| (0..m).map(|i| b.get(i, j).norm_sqr()).sum::<f64>().sqrt())
        .collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());

    let sigma: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let mut u = Matrix::zeros(m, n, Field::Complex);
    for (k, &j) in order.iter().enumerate() {
        if sigma[k] > 0.0 {
            for i in 0..m {
                u.set(i, k, b.get(i, j) / sigma[k]);
            }
        }
    }
    let v_sorted = Matrix::from_fn_complex(n, n, |i, k| v.get(i, order[k]));
    Ok(Svd {
        u,
        sigma,
        v: v_sorted,
    })
}

/// Columns p and q recombined by the Jacobi rotation (right action).
fn rotate_columns(m: &mut Matrix, p: usize, q: usize, c: f64, s: f64, phase: Complex64) {
    for k in 0..m.rows() {
        let mp = m.get(k, p);
        let mq = m.get(k, q);
        m.set(k, p, c * mp - s * phase.conj() * mq);
        m.set(k, q, s * phase * mp + c * mq);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn reconstruct(s: &Svd, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn_complex(rows, cols, |i, j| {
            (0..s.sigma.len())
                .map(|k| s.u.get(i, k) * s.sigma[k] * s.v.get(j, k).conj())
                .sum()
        })
    }

    #[test]
    fn singular_values_of_all_ones_2x2() {
        // Rank-one: eigenvalues of J_2 are 2 and 0, so singular values (2, 0).
        let j2 = Matrix::ones(2, 2);
        let s = svd(&j2).unwrap();
        assert_abs_diff_eq!(s.sigma[0], 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.sigma[1], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn wide_matrix_round_trips() {
        let a = Matrix::from_rows_complex(&[
            vec![
                Complex64::new(1.0, 0.5),
                Complex64::new(-2.0, 0.0),
                Complex64::new(0.0, 3.0),
            ],
            vec![
                Complex64::new(0.0, -1.0),
                Complex64::new(4.0, 0.25),
                Complex64::new(0.5, 0.0),
            ],
        ])
        .unwrap();
        let s = svd(&a).unwrap();
        assert_eq!(s.sigma.len(), 2);
        let back = reconstruct(&s, 2, 3);
        assert!(back.max_abs_diff(&a).unwrap() < 1e-12);
    }

    #[test]
    fn v_is_unitary() {
        let a = Matrix::from_rows_real(&[
            vec![0.2, 1.7, -0.3],
            vec![1.0, 0.0, 0.9],
            vec![-0.5, 2.0, 0.1],
            vec![0.0, 0.4, 0.8],
        ])
        .unwrap();
        let s = svd(&a).unwrap();
        let vtv = s.v.adjoint().matmul(&s.v).unwrap();
        assert!(vtv.max_abs_diff(&Matrix::identity(3)).unwrap() < 1e-12);
    }
}
