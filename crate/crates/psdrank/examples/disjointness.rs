//! Disjointness is the extreme case for PSD-rank: the 2^n-square matrix
//! needs size exactly 2^n. The upper bound is the n-fold tensor power of a
//! size-2 factorization of the one-bit matrix; the matching lower bound
//! comes from recursively splitting off the zero block.
//!
//! Run with: cargo run --example disjointness

use psdrank::bounds::{block_zero_bound, BlockPartition, LeafBound};
use psdrank::factor::{tensor_factorization, verify};
use psdrank::families::{generate, MatrixFamily};
use psdrank::report::disjointness_base_factorization;
use psdrank::tol::ToleranceConfig;

fn main() -> psdrank::Result<()> {
    let tol = ToleranceConfig::default();
    let base = disjointness_base_factorization(&tol)?;

    for n in 1..=4usize {
        let mut fact = base.clone();
        for _ in 1..n {
            fact = tensor_factorization(&fact, &base)?;
        }
        let target = generate(MatrixFamily::Disjointness { n })?;
        let report = verify(&fact, &target, &tol)?;

        let half = 1usize << (n - 1);
        let lower = block_zero_bound(
            &target,
            BlockPartition {
                row_split: half,
                col_split: half,
            },
            LeafBound::B1,
            &tol,
        )?;

        println!(
            "n={n}: upper bound {} (tensor power, max error {:.1e}), lower bound {} (zero blocks) -> PSD-rank = {}",
            fact.size(),
            report.max_abs_error,
            lower.value,
            1 << n
        );
    }
    Ok(())
}
