//! PSD-rank of approximations of the identity. The matrix with diagonal c
//! and ones elsewhere has a tiny factorization when c is moderate: c-element
//! point sets from finite-field lines give size ⌈c⌉·q (q prime near √n),
//! and 2-element sets give size ⌈√(2n)⌉+1 for c ≤ 2. The row-maxima bound
//! shows where the PSD-rank must stay full instead.
//!
//! Run with: cargo run --example approx_identity

use psdrank::bounds::bound_b4;
use psdrank::factor::{mc_factorization, verify};
use psdrank::families::{generate, has_no_dominant_entry_columns, MatrixFamily};
use psdrank::tol::ToleranceConfig;

fn main() -> psdrank::Result<()> {
    let tol = ToleranceConfig::default();

    println!("constant-diagonal matrices (diagonal c, off-diagonal 1):");
    for (n, c) in [(9usize, 3.0f64), (25, 4.0), (10, 2.0), (9, 2.5), (16, 0.5)] {
        let fact = mc_factorization(n, c)?;
        let target = generate(MatrixFamily::Mc { n, c })?;
        let report = verify(&fact, &target, &tol)?;
        println!(
            "  n={n:<3} c={c:<4}: size {:>2} factorization, max error {:.2e}",
            fact.size(),
            report.max_abs_error
        );
    }

    // Unit diagonal with off-diagonal eps: full PSD-rank if and only if
    // eps < 1/(n-1)^2. The dominant-entry test flips exactly there, and the
    // row-maxima bound certifies fullness below the threshold.
    let n = 4usize;
    let threshold = 1.0 / ((n - 1) * (n - 1)) as f64;
    println!();
    println!("unit diagonal, off-diagonal eps, n = {n} (threshold 1/(n-1)^2 = {threshold:.4}):");
    for eps in [0.5 * threshold, threshold, 2.0 * threshold] {
        let a = generate(MatrixFamily::EpsIdentity { n, eps })?;
        let balanced = has_no_dominant_entry_columns(&a).iter().all(|&b| b);
        let b4 = bound_b4(&a)?.value;
        println!(
            "  eps = {eps:.4}: B4 = {b4:.4}, phase-balanceable: {balanced} -> PSD-rank {}",
            if balanced { "< n" } else { "= n (full)" }
        );
    }
    Ok(())
}
