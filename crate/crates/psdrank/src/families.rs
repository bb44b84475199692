//! Generators for every concrete matrix family used by the bound and
//! factorization suites. All entries are exact where the definition is
//! integral or rational in the parameters.

use crate::error::{Error, Result};
use crate::matrix::{kronecker, Matrix};
use crate::nonneg::NonnegativeMatrix;

/// Largest bit-string parameter accepted for the 2^n-square families.
pub const MAX_BITSTRING_N: usize = 11;

/// A named matrix family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatrixFamily {
    /// J_n − I_n, the communication matrix of nonequality.
    Derangement { n: usize },
    /// Unit diagonal, constant `eps` off the diagonal.
    EpsIdentity { n: usize, eps: f64 },
    /// Constant `c` on the diagonal, ones off the diagonal.
    Mc { n: usize, c: f64 },
    /// 2^n-square 0/1 matrix of the inner product function, rows and columns
    /// indexed by n-bit strings in lexicographic order (most significant
    /// bit first).
    InnerProduct { n: usize },
    /// 2^n-square 0/1 matrix of set disjointness over an n-element ground set.
    Disjointness { n: usize },
    /// The 6×6 slack matrix of the regular hexagon.
    HexagonSlack,
    /// Unit diagonal plus an all-ones first row; `eps` elsewhere.
    OnesRowIdentity { n: usize, eps: f64 },
    /// Ones at (i, i) and (i, i+1 mod n); `eps` elsewhere.
    CyclicPairIdentity { n: usize, eps: f64 },
    /// (1−eps)·T + eps·J for T the 0/1 tridiagonal matrix.
    TridiagonalBlend { n: usize, eps: f64 },
    /// A ⊗ A for A = [[1, a], [a, 1]].
    TensorPair { a: f64 },
}

pub fn generate(spec: MatrixFamily) -> Result<NonnegativeMatrix> {
    use MatrixFamily::*;
    let m = match spec {
        Derangement { n } => {
            require(n >= 1, "derangement needs n >= 1")?;
            Matrix::from_fn_real(n, n, |i, j| if i == j { 0.0 } else { 1.0 })
        }
        EpsIdentity { n, eps } => {
            require(n >= 1, "eps-identity needs n >= 1")?;
            require(eps >= 0.0, "eps must be nonnegative")?;
            Matrix::from_fn_real(n, n, |i, j| if i == j { 1.0 } else { eps })
        }
        Mc { n, c } => {
            require(n >= 2, "mc needs n >= 2")?;
            require(c >= 0.0, "c must be nonnegative")?;
            Matrix::from_fn_real(n, n, |i, j| if i == j { c } else { 1.0 })
        }
        InnerProduct { n } => {
            require(n >= 1, "inner-product needs n >= 1")?;
            require(n <= MAX_BITSTRING_N, "inner-product matrix too large")?;
            let size = 1usize << n;
            Matrix::from_fn_real(size, size, |x, y| f64::from(inner_product_bit(x, y)))
        }
        Disjointness { n } => {
            require(n >= 1, "disjointness needs n >= 1")?;
            require(n <= MAX_BITSTRING_N, "disjointness matrix too large")?;
            let size = 1usize << n;
            Matrix::from_fn_real(size, size, |x, y| if x & y == 0 { 1.0 } else { 0.0 })
        }
        HexagonSlack => Matrix::from_rows_real(&[
            vec![0.0, 0.0, 1.0, 2.0, 2.0, 1.0],
            vec![1.0, 0.0, 0.0, 1.0, 2.0, 2.0],
            vec![2.0, 1.0, 0.0, 0.0, 1.0, 2.0],
            vec![2.0, 2.0, 1.0, 0.0, 0.0, 1.0],
            vec![1.0, 2.0, 2.0, 1.0, 0.0, 0.0],
            vec![0.0, 1.0, 2.0, 2.0, 1.0, 0.0],
        ])?,
        OnesRowIdentity { n, eps } => {
            require(n >= 1, "ones-row-identity needs n >= 1")?;
            require(eps >= 0.0, "eps must be nonnegative")?;
            Matrix::from_fn_real(n, n, |i, j| if i == 0 || i == j { 1.0 } else { eps })
        }
        CyclicPairIdentity { n, eps } => {
            require(n >= 2, "cyclic-pair-identity needs n >= 2")?;
            require(eps >= 0.0, "eps must be nonnegative")?;
            Matrix::from_fn_real(n, n, |i, j| {
                if j == i || j == (i + 1) % n {
                    1.0
                } else {
                    eps
                }
            })
        }
        TridiagonalBlend { n, eps } => {
            require(n >= 1, "tridiagonal-blend needs n >= 1")?;
            require((0.0..=1.0).contains(&eps), "eps must lie in [0, 1]")?;
            Matrix::from_fn_real(n, n, |i, j| {
                if i.abs_diff(j) <= 1 {
                    1.0
                } else {
                    eps
                }
            })
        }
        TensorPair { a } => {
            require(a >= 0.0, "a must be nonnegative")?;
            let base = Matrix::from_rows_real(&[vec![1.0, a], vec![a, 1.0]])?;
            kronecker(&base, &base)
        }
    };
    NonnegativeMatrix::new(m)
}

/// IP(x, y) = Σ x_i y_i mod 2 on the bit representations.
pub fn inner_product_bit(x: usize, y: usize) -> u8 {
    ((x & y).count_ones() % 2) as u8
}

/// Per-column test on the entrywise square root A' of `a`: true when the
/// column's largest entry is at most the sum of the remaining entries, the
/// precondition for balancing its phases to zero.
pub fn has_no_dominant_entry_columns(a: &NonnegativeMatrix) -> Vec<bool> {
    let root = a.entrywise_sqrt();
    (0..root.cols())
        .map(|j| {
            let col: Vec<f64> = (0..root.rows()).map(|i| root.get(i, j)).collect();
            column_has_no_dominant_entry(&col)
        })
        .collect()
}

pub(crate) fn column_has_no_dominant_entry(v: &[f64]) -> bool {
    let argmax = v
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .map(|(i, _)| i);
    let Some(argmax) = argmax else { return false };
    let rest: f64 = v
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != argmax)
        .map(|(_, &x)| x)
        .sum();
    v[argmax] <= rest
}

fn require(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(msg.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::kronecker;

    #[test]
    fn derangement_2x2() {
        let a = generate(MatrixFamily::Derangement { n: 2 }).unwrap();
        assert_eq!(a.get(0, 0), 0.0);
        assert_eq!(a.get(0, 1), 1.0);
        assert_eq!(a.get(1, 0), 1.0);
        assert_eq!(a.get(1, 1), 0.0);
    }

    #[test]
    fn hexagon_first_row() {
        let a = generate(MatrixFamily::HexagonSlack).unwrap();
        let row: Vec<f64> = (0..6).map(|j| a.get(0, j)).collect();
        assert_eq!(row, vec![0.0, 0.0, 1.0, 2.0, 2.0, 1.0]);
    }

    #[test]
    fn disjointness_is_tensor_power() {
        let d1 = generate(MatrixFamily::Disjointness { n: 1 }).unwrap();
        assert_eq!(d1.get(0, 0), 1.0);
        assert_eq!(d1.get(1, 1), 0.0);
        let d2 = generate(MatrixFamily::Disjointness { n: 2 }).unwrap();
        let tensor = kronecker(d1.matrix(), d1.matrix());
        assert_eq!(d2.matrix().max_abs_diff(&tensor).unwrap(), 0.0);
    }

    #[test]
    fn inner_product_block_recursion() {
        // IP_{k+1} = [[IP_k, IP_k], [IP_k, J − IP_k]] in block form.
        let k = 3;
        let small = generate(MatrixFamily::InnerProduct { n: k }).unwrap();
        let big = generate(MatrixFamily::InnerProduct { n: k + 1 }).unwrap();
        let half = 1 << k;
        for i in 0..half {
            for j in 0..half {
                let s = small.get(i, j);
                assert_eq!(big.get(i, j), s);
                assert_eq!(big.get(i, j + half), s);
                assert_eq!(big.get(i + half, j), s);
                assert_eq!(big.get(i + half, j + half), 1.0 - s);
            }
        }
        // Symmetric.
        for i in 0..2 * half {
            for j in 0..i {
                assert_eq!(big.get(i, j), big.get(j, i));
            }
        }
    }

    #[test]
    fn dominant_entry_check_on_tensor_pair() {
        let ok = generate(MatrixFamily::TensorPair { a: 0.5 }).unwrap();
        assert!(has_no_dominant_entry_columns(&ok).iter().all(|&b| b));
        // 0.1 < (sqrt(2) − 1)² keeps the unit entry dominant in every column.
        let bad = generate(MatrixFamily::TensorPair { a: 0.1 }).unwrap();
        assert!(!has_no_dominant_entry_columns(&bad).iter().all(|&b| b));
    }

    #[test]
    fn identity_columns_are_dominant() {
        let id = generate(MatrixFamily::EpsIdentity { n: 2, eps: 0.0 }).unwrap();
        assert_eq!(has_no_dominant_entry_columns(&id), vec![false, false]);
    }

    #[test]
    fn ones_row_identity_layout() {
        let a = generate(MatrixFamily::OnesRowIdentity { n: 4, eps: 0.25 }).unwrap();
        assert_eq!(a.get(0, 3), 1.0);
        assert_eq!(a.get(2, 2), 1.0);
        assert_eq!(a.get(2, 0), 0.25);
    }

    #[test]
    fn cyclic_pair_wraps_around() {
        let a = generate(MatrixFamily::CyclicPairIdentity { n: 5, eps: 0.1 }).unwrap();
        assert_eq!(a.get(4, 4), 1.0);
        assert_eq!(a.get(4, 0), 1.0);
        assert_eq!(a.get(4, 1), 0.1);
        // Every column also holds exactly two ones.
        for j in 0..5 {
            let ones = (0..5).filter(|&i| a.get(i, j) == 1.0).count();
            assert_eq!(ones, 2);
        }
    }

    #[test]
    fn tridiagonal_blend_values() {
        let a = generate(MatrixFamily::TridiagonalBlend { n: 4, eps: 0.001 }).unwrap();
        assert_eq!(a.get(0, 1), 1.0);
        assert_eq!(a.get(1, 0), 1.0);
        assert_eq!(a.get(0, 2), 0.001);
    }

    #[test]
    fn rejects_out_of_domain_params() {
        assert!(generate(MatrixFamily::EpsIdentity { n: 3, eps: -0.5 }).is_err());
        assert!(generate(MatrixFamily::Mc { n: 1, c: 2.0 }).is_err());
        assert!(generate(MatrixFamily::InnerProduct { n: 40 }).is_err());
    }
}
