//! Tour of the five lower bounds on a set of matrices chosen so that each
//! bound wins somewhere: rank-based B1, entropy-based B2, fidelity B3, row
//! maxima B4, and the combined B5.
//!
//! Run with: cargo run --example bounds_tour

use psdrank::bounds::{bound_b1, bound_b2, bound_b3, bound_b4, bound_b5, SimplexOptConfig};
use psdrank::families::{generate, MatrixFamily};
use psdrank::tol::ToleranceConfig;

fn main() -> psdrank::Result<()> {
    let tol = ToleranceConfig::default();
    let cfg = SimplexOptConfig {
        seed: 0,
        ..SimplexOptConfig::default()
    };

    let cases = [
        (
            "identity + 1/n off-diagonal (row maxima win)",
            generate(MatrixFamily::EpsIdentity { n: 11, eps: 0.1 })?,
        ),
        (
            "tridiagonal blend (fidelity wins)",
            generate(MatrixFamily::TridiagonalBlend { n: 10, eps: 0.001 })?,
        ),
        (
            "identity + 0.9 off-diagonal (plain rank wins)",
            generate(MatrixFamily::EpsIdentity { n: 10, eps: 0.9 })?,
        ),
        ("hexagon slack matrix", generate(MatrixFamily::HexagonSlack)?),
    ];

    println!(
        "{:<48} {:>7} {:>7} {:>7} {:>7} {:>7}",
        "matrix", "B1", "B2", "B3", "B4", "B5"
    );
    for (label, a) in &cases {
        let b1 = bound_b1(a, &tol)?.value;
        let b2 = bound_b2(a)?.value;
        let b3 = bound_b3(a, &cfg, None)?.value;
        let b4 = bound_b4(a)?.value;
        let b5 = bound_b5(a, &cfg, None)?.value;
        println!("{label:<48} {b1:>7.3} {b2:>7.3} {b3:>7.3} {b4:>7.3} {b5:>7.3}");
    }

    println!();
    println!("Each column is a valid lower bound on the PSD-rank; none of them");
    println!("dominates the others, which is why the crate reports all five.");
    Ok(())
}
