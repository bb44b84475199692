//! Inner product: a 2^n-square 0/1 matrix of full rank whose PSD-rank is
//! only Θ(√N). Two routes to the same conclusion: a sign matrix whose
//! squared entries reproduce the matrix at rank ~2√N, and a one-way quantum
//! protocol on n/2 + 1 qubits that computes the function in expectation.
//!
//! Run with: cargo run --example inner_product

use psdrank::factor::{hadamard_root_factorization, ip_sign_matrix, verify};
use psdrank::families::{generate, MatrixFamily};
use psdrank::protocol::{ip_protocol, state_dimension, ProtocolMode};
use psdrank::spectral::numeric_rank;
use psdrank::tol::ToleranceConfig;

fn main() -> psdrank::Result<()> {
    let tol = ToleranceConfig::default();

    println!("sign-matrix route:");
    for n in [2usize, 3, 4, 5] {
        let k = n.div_ceil(2);
        let m = ip_sign_matrix(n, k)?;
        let rank = numeric_rank(&m, &tol)?;
        let target = generate(MatrixFamily::InnerProduct { n })?;
        let fact = hadamard_root_factorization(&m, &tol)?;
        let report = verify(&fact, &target, &tol)?;
        println!(
            "  n={n}: matrix {0}x{0}, sign-matrix rank {rank} -> real factorization of size {1}, max error {2:.2e}",
            1 << n,
            fact.size(),
            report.max_abs_error
        );
    }

    println!();
    println!("protocol route (n = 4, message dimension {}):", state_dimension(4));
    for (x, y) in [([1u8, 0, 1, 0], [0u8, 1, 1, 0]), ([1, 1, 1, 1], [1, 1, 1, 1])] {
        let out = ip_protocol(4, &x, &y, ProtocolMode::Exact)?;
        println!("  x={x:?} y={y:?}");
        for ((label, p), v) in out.labels.iter().zip(&out.outcome_probs).zip(&out.output_values) {
            println!("    {label:<28} p = {p:<8.4} output = {v}");
        }
        println!("    expectation = {} (the function value)", out.expectation);
    }

    // Sampling converges to the same expectation.
    let sampled = ip_protocol(
        4,
        &[1, 0, 1, 0],
        &[0, 1, 1, 0],
        ProtocolMode::Sample {
            seed: 1,
            count: 200_000,
        },
    )?;
    println!();
    println!("sampled mean over 200000 runs: {:.4}", sampled.expectation);
    Ok(())
}
