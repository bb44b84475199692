#![allow(dead_code)] // each test target uses a different subset

//! Shared random generators for the integration suites. Everything is
//! seeded ChaCha so failures replay exactly.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use psdrank::density::DensityMatrix;
use psdrank::eigen::hermitian_eigen;
use psdrank::factor::PsdFactorization;
use psdrank::matrix::{Field, Matrix};
use psdrank::nonneg::NonnegativeMatrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn_complex(rows, cols, |_, _| {
        Complex64::new(rng.random::<f64>() * 2.0 - 1.0, rng.random::<f64>() * 2.0 - 1.0)
    })
}

pub fn random_real_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn_real(rows, cols, |_, _| rng.random::<f64>() * 2.0 - 1.0)
}

/// Random PSD matrix B·B† (complex when `complex`, else real symmetric).
pub fn random_psd(rng: &mut ChaCha8Rng, dim: usize, complex: bool) -> Matrix {
    let b = if complex {
        random_complex_matrix(rng, dim, dim)
    } else {
        random_real_matrix(rng, dim, dim)
    };
    b.matmul(&b.adjoint()).unwrap()
}

pub fn random_density(rng: &mut ChaCha8Rng, dim: usize) -> DensityMatrix {
    let p = random_psd(rng, dim, true);
    let tr = p.trace().re;
    DensityMatrix::new(p.scale(1.0 / tr)).unwrap()
}

/// Random POVM with `outcomes` elements: normalizes random PSD matrices by
/// S^{-1/2} (·) S^{-1/2} for S their sum.
pub fn random_povm(rng: &mut ChaCha8Rng, dim: usize, outcomes: usize) -> Vec<Matrix> {
    let parts: Vec<Matrix> = (0..outcomes).map(|_| random_psd(rng, dim, true)).collect();
    let mut sum = Matrix::zeros(dim, dim, Field::Complex);
    for p in &parts {
        sum = sum.add(p).unwrap();
    }
    let eig = hermitian_eigen(&sum).unwrap();
    let inv_root = Matrix::from_fn_complex(dim, dim, |i, j| {
        (0..dim)
            .map(|k| {
                eig.vectors.get(i, k) * (1.0 / eig.values[k].sqrt()) * eig.vectors.get(j, k).conj()
            })
            .sum()
    });
    parts
        .iter()
        .map(|p| {
            inv_root
                .matmul(p)
                .unwrap()
                .matmul(&inv_root)
                .unwrap()
        })
        .collect()
}

/// Random size-r factorization of an (implied) rows×cols nonnegative target,
/// plus the target it realizes.
pub fn random_factorization(
    rng: &mut ChaCha8Rng,
    rows: usize,
    cols: usize,
    r: usize,
    complex: bool,
) -> (PsdFactorization, NonnegativeMatrix) {
    let e: Vec<Matrix> = (0..rows).map(|_| random_psd(rng, r, complex)).collect();
    let f: Vec<Matrix> = (0..cols).map(|_| random_psd(rng, r, complex)).collect();
    let fact = PsdFactorization::new(e, f).unwrap();
    let realized = fact.realized_matrix().unwrap();
    let target = NonnegativeMatrix::new(Matrix::from_fn_real(rows, cols, |i, j| {
        realized.re(i, j).max(0.0)
    }))
    .unwrap();
    (fact, target)
}

/// Measurement distribution of a state under a POVM.
pub fn measure(rho: &DensityMatrix, povm: &[Matrix]) -> Vec<f64> {
    povm.iter()
        .map(|e| e.trace_product(rho.matrix()).unwrap().re.max(0.0))
        .collect()
}
