//! Nonnegative factorization of an approximate identity from random binary
//! codewords: associating row and column i with sqrt(2/ℓ)·C_i makes the
//! realized Gram matrix concentrate near 1 on the diagonal and 1/2 off it
//! once ℓ grows like log n.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::nonneg::NonnegativeMatrix;

/// Dimension-ℓ nonnegative vectors (shared by the row and column sides) and
/// the matrix of their inner products.
#[derive(Debug, Clone)]
pub struct NonnegCodeFactorization {
    pub vectors: Vec<Vec<f64>>,
    pub realized: NonnegativeMatrix,
}

pub fn random_code_nonneg_factorization(
    n: usize,
    ell: usize,
    seed: u64,
) -> Result<NonnegCodeFactorization> {
    if n == 0 || ell == 0 {
        return Err(Error::Domain("need n >= 1 and ell >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = (2.0 / ell as f64).sqrt();
    let vectors: Vec<Vec<f64>> = (0..n)
        .map(|_| {
            (0..ell)
                .map(|_| if rng.random::<bool>() { scale } else { 0.0 })
                .collect()
        })
        .collect();
    let realized = Matrix::from_fn_real(n, n, |i, j| {
        vectors[i].iter().zip(&vectors[j]).map(|(a, b)| a * b).sum()
    });
    Ok(NonnegCodeFactorization {
        vectors,
        realized: NonnegativeMatrix::new(realized)?,
    })
}
