//! Any factorization of a column-stochastic matrix can be rewritten so the
//! E side is a POVM and every F factor is a quantum state. In that normal
//! form the factorization IS a one-way protocol: sending state F_j and
//! measuring {E_i} yields outcome i with probability P(i, j).
//!
//! Run with: cargo run --example povm_protocol

use psdrank::factor::{mc_factorization, normalize_to_povm_form, PsdFactorization};
use psdrank::families::{generate, MatrixFamily};
use psdrank::matrix::Matrix;
use psdrank::protocol::evaluate_protocol;
use psdrank::tol::ToleranceConfig;

fn main() -> psdrank::Result<()> {
    let tol = ToleranceConfig::default();

    // A size-6 factorization of the 10×10 constant-diagonal matrix with
    // c = 2, rescaled so the target is stochastic.
    let (n, c) = (10usize, 2.0f64);
    let fact = mc_factorization(n, c)?;
    let target = generate(MatrixFamily::Mc { n, c })?;
    let sums = target.column_sums();
    let f_scaled: Vec<Matrix> = fact
        .f_factors()
        .iter()
        .zip(&sums)
        .map(|(f, &s)| f.scale(1.0 / s))
        .collect();
    let scaled = PsdFactorization::new(fact.e_factors().to_vec(), f_scaled)?;
    let stochastic = target.column_normalized()?;

    let normal = normalize_to_povm_form(&scaled, &stochastic, &tol)?;
    println!(
        "normalized a size-{} factorization (compression: {:?})",
        normal.factorization.size(),
        normal.compressed_from
    );

    // Measuring column j's state reproduces column j of the target.
    let column = 3;
    let values: Vec<f64> = (0..n).map(|i| if i == column { 1.0 } else { 0.0 }).collect();
    let out = evaluate_protocol(&normal.factorization, column, &values)?;
    println!("measuring the state for column {column}:");
    for (i, p) in out.outcome_probs.iter().enumerate() {
        println!(
            "  outcome {i}: p = {p:.6} (target column entry {:.6})",
            stochastic.get(i, column)
        );
    }
    println!(
        "expectation with an indicator payout on outcome {column}: {:.6}",
        out.expectation
    );
    Ok(())
}
