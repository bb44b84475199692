//! Low-rank sign matrix for the inner product function: expanding IP_n into
//! 2^k-square blocks and flipping the sign of every repeated block below the
//! first block row leaves the squared moduli untouched while the rank drops
//! to 2^k − 1 + 2^{n−k}.

use crate::error::{Error, Result};
use crate::families::{inner_product_bit, MAX_BITSTRING_N};
use crate::matrix::Matrix;

/// M with entries in {0, ±1} and M ∘ M̄ equal to the 2^n-square inner
/// product matrix; `k` picks the block size 2^k (1 ≤ k < n).
pub fn ip_sign_matrix(n: usize, k: usize) -> Result<Matrix> {
    if !(2..=MAX_BITSTRING_N).contains(&n) {
        return Err(Error::Domain(format!(
            "need 2 <= n <= {MAX_BITSTRING_N}, got {n}"
        )));
    }
    if k == 0 || k >= n {
        return Err(Error::Domain(format!("need 1 <= k < n, got k = {k}")));
    }
    let size = 1usize << n;
    let low_mask = (1usize << k) - 1;
    Ok(Matrix::from_fn_real(size, size, |x, y| {
        let inner = f64::from(inner_product_bit(x & low_mask, y & low_mask));
        let block_row = x >> k;
        let block_bit = inner_product_bit(x >> k, y >> k);
        if block_row == 0 {
            inner
        } else if block_bit == 0 {
            -inner
        } else {
            1.0 - inner
        }
    }))
}
