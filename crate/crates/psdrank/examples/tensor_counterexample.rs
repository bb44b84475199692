//! PSD-rank is not multiplicative under tensor products. For
//! A = [[1, a], [a, 1]] with a ≠ 1 the PSD-rank is 2, yet A ⊗ A admits a
//! factorization of size 3 < 4 whenever no column of the entrywise square
//! root has a dominant entry: balancing each column's phases produces a
//! Hadamard root with zero column sums, so its rank drops below 4.
//!
//! Run with: cargo run --example tensor_counterexample

use psdrank::factor::{not_full_factorization, phase_balance, verify};
use psdrank::families::{generate, has_no_dominant_entry_columns, MatrixFamily};
use psdrank::tol::ToleranceConfig;

fn main() -> psdrank::Result<()> {
    let tol = ToleranceConfig::default();
    let sqrt2 = 2f64.sqrt();

    // The columns of sqrt(A ⊗ A) are permutations of (1, sqrt a, sqrt a, a);
    // phase balancing closes that quadrilateral for a in the window below.
    let v = [1.0, 0.5f64.sqrt(), 0.5f64.sqrt(), 0.5];
    let phases = phase_balance(&v)?;
    println!(
        "column (1, sqrt a, sqrt a, a) at a=0.5 balances with residual {:.2e}",
        phases.residual(&v)
    );
    println!();

    for a in [0.1, sqrt2 - 1.0, 0.5, 1.5, sqrt2 + 1.0, 6.0] {
        let target = generate(MatrixFamily::TensorPair { a })?;
        let balanced = has_no_dominant_entry_columns(&target).iter().all(|&b| b);
        match not_full_factorization(&target, &tol) {
            Ok(fact) => {
                let report = verify(&fact, &target, &tol)?;
                println!(
                    "a = {a:.4}: size {} < 4 factorization (max error {:.1e}), so the tensor square is sub-multiplicative",
                    fact.size(),
                    report.max_abs_error
                );
            }
            Err(e) => {
                assert!(!balanced);
                println!("a = {a:.4}: {e}");
            }
        }
    }
    Ok(())
}
