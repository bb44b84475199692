//! Real PSD factorizations of the matrices with constant diagonal c and
//! all-ones off-diagonal, built from families of c-element sets that
//! pairwise intersect in at most one point: lines over a finite field for
//! c > 2, all 2-element subsets for c ≤ 2.

use super::PsdFactorization;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Factorization of the n×n matrix with diagonal c and off-diagonal ones.
///
/// For c > 2 the size is ⌈c⌉·q with q the smallest prime at least
/// max(⌈√n⌉, ⌈c⌉); for c in [0, 2] the size is ⌈√(2n)⌉ + 1. The degenerate
/// c = 1 (the all-ones matrix) gets the trivial size-1 factorization.
pub fn mc_factorization(n: usize, c: f64) -> Result<PsdFactorization> {
    if n < 2 {
        return Err(Error::Domain(format!("need n >= 2, got {n}")));
    }
    if !(c >= 0.0) {
        return Err(Error::Domain(format!("need c >= 0, got {c}")));
    }
    if (c - 1.0).abs() < 1e-14 {
        // Rank-one target: all-ones factors of size 1.
        let ones = vec![Matrix::ones(1, 1); n];
        return PsdFactorization::new(ones.clone(), ones);
    }

    let (size, sets, block_off_diag, scale) = if c > 2.0 {
        let c_int = c.ceil() as usize;
        let q = next_prime((n as f64).sqrt().ceil() as usize, c_int);
        let size = c_int * q;
        // Line y = ax + b sampled at x = 0..c_int−1 inside the universe
        // [c_int] × F_q; distinct lines share at most one point.
        let mut sets = Vec::with_capacity(n);
        'outer: for a in 0..q {
            for b in 0..q {
                sets.push((0..c_int).map(|x| x * q + (a * x + b) % q).collect::<Vec<_>>());
                if sets.len() == n {
                    break 'outer;
                }
            }
        }
        if sets.len() < n {
            return Err(Error::Domain(format!(
                "line family capacity {} below n = {n}",
                q * q
            )));
        }
        let a_off = (c - 1.0) / (c_int as f64 - 1.0);
        (size, sets, a_off, 1.0 / c_int as f64)
    } else {
        let size = (2.0 * n as f64).sqrt().ceil() as usize + 1;
        let mut sets = Vec::with_capacity(n);
        'pairs: for p in 0..size {
            for r in (p + 1)..size {
                sets.push(vec![p, r]);
                if sets.len() == n {
                    break 'pairs;
                }
            }
        }
        if sets.len() < n {
            return Err(Error::Domain(format!(
                "pair family capacity {} below n = {n}",
                size * (size - 1) / 2
            )));
        }
        (size, sets, c - 1.0, 0.5)
    };

    let mut e_factors = Vec::with_capacity(n);
    let mut f_factors = Vec::with_capacity(n);
    for set in &sets {
        let mut e = Matrix::zeros(size, size, crate::matrix::Field::Real);
        for &u in set {
            for &v in set {
                e.set_re(u, v, if u == v { scale } else { block_off_diag * scale });
            }
        }
        let mut f = Matrix::identity(size);
        for &u in set {
            for &v in set {
                if u != v {
                    f.set_re(u, v, 1.0);
                }
            }
        }
        e_factors.push(e);
        f_factors.push(f);
    }
    PsdFactorization::new(e_factors, f_factors)
}

/// Smallest prime at least max(lo, also). Sizes here are tiny, so trial
/// division is plenty.
fn next_prime(lo: usize, also: usize) -> usize {
    let mut q = lo.max(also).max(2);
    loop {
        if is_prime(q) {
            return q;
        }
        q += 1;
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
