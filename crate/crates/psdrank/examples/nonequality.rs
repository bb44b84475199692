//! The derangement matrix J − I of size n² has a PSD factorization of size
//! just n (odd n): Hermitian unitaries on the symbol classes of the Z_n
//! addition table, filled with Vandermonde rows. The rank bound B1 = n shows
//! this is exactly optimal. Doubling realifies the factorization at twice
//! the size.
//!
//! Run with: cargo run --example nonequality

use psdrank::bounds::bound_b1;
use psdrank::factor::{ne_factorization_even, ne_factorization_odd, realify, verify};
use psdrank::families::{generate, MatrixFamily};
use psdrank::tol::ToleranceConfig;

fn main() -> psdrank::Result<()> {
    let tol = ToleranceConfig::default();

    for n in [3usize, 5, 7] {
        let fact = ne_factorization_odd(n)?;
        let target = generate(MatrixFamily::Derangement { n: n * n })?;
        let report = verify(&fact, &target, &tol)?;
        let b1 = bound_b1(&target, &tol)?.value;
        println!(
            "odd n={n}: {}x{} derangement factored at size {}, max error {:.2e}, B1 = {:.1} (tight)",
            n * n,
            n * n,
            fact.size(),
            report.max_abs_error,
            b1
        );
    }

    for n in [2usize, 4] {
        let fact = ne_factorization_even(n)?;
        let size = n * n - 1;
        let target = generate(MatrixFamily::Derangement { n: size })?;
        let report = verify(&fact, &target, &tol)?;
        println!(
            "even n={n}: {size}x{size} derangement factored at size {}, max error {:.2e}",
            fact.size(),
            report.max_abs_error
        );
    }

    // Complex factors can always be made real at twice the size.
    let fact = ne_factorization_odd(3)?;
    let real = realify(&fact)?;
    let target = generate(MatrixFamily::Derangement { n: 9 })?;
    let report = verify(&real, &target, &tol)?;
    println!(
        "realified odd n=3: size {} (was {}), max error {:.2e}",
        real.size(),
        fact.size(),
        report.max_abs_error
    );
    println!();
    println!("The real size cannot drop back to n: the real-rank bound B1' of");
    println!("the 9x9 derangement is {:.3}, so real factors need size >= 4.",
        psdrank::bounds::bound_b1_real(&target, &tol)?.value
    );
    Ok(())
}
