//! Acceptance suite: every numbered criterion below prints one PASS/FAIL
//! line (run with `cargo test --test acceptance -- --nocapture` to see them
//! all) and fails the build when violated.

mod common;

use psdrank::bounds::{
    block_zero_bound, bound_b1, bound_b1_real, bound_b2, bound_b3, bound_b4, bound_b5,
    eval_b3_certificate, eval_b5_certificates, eval_rescaled_certificate, rescaled_bound,
    BlockPartition, InnerBound, LeafBound, SimplexOptConfig,
};
use psdrank::density::DensityMatrix;
use psdrank::error::Error;
use psdrank::factor::{
    hadamard_root_factorization, ip_sign_matrix, mc_factorization, ne_factorization_even,
    ne_factorization_odd, normalize_to_povm_form, not_full_factorization, realify,
    tensor_factorization, verify,
};
use psdrank::families::{generate, has_no_dominant_entry_columns, MatrixFamily};
use psdrank::fidelity::{classical_fidelity, quantum_fidelity};
use psdrank::matrix::{hadamard_product, Field, Matrix};
use psdrank::nonneg::NonnegativeMatrix;
use psdrank::protocol::{ip_protocol, ProtocolMode};
use psdrank::report::disjointness_base_factorization;
use psdrank::spectral::{numeric_rank, trace_norm_rank_bound};
use psdrank::tol::ToleranceConfig;

fn tol() -> ToleranceConfig {
    ToleranceConfig::default()
}

fn cfg() -> SimplexOptConfig {
    SimplexOptConfig {
        seed: 7,
        ..SimplexOptConfig::default()
    }
}

/// Light solver budget for the thousand-instance sweeps; any feasible
/// certificate still yields a sound bound.
fn light_cfg() -> SimplexOptConfig {
    SimplexOptConfig {
        max_iters: 300,
        restarts: 2,
        seed: 7,
        ..SimplexOptConfig::default()
    }
}

struct Criterion {
    label: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(label: &'static str) -> Self {
        Self {
            label,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("PASS {}", self.label);
        } else {
            println!("FAIL {}: {}", self.label, self.failures.join("; "));
            panic!("{} failed: {}", self.label, self.failures.join("; "));
        }
    }
}

fn approx(x: f64, target: f64, tol: f64) -> bool {
    (x - target).abs() <= tol
}

fn uniform(n: usize) -> Vec<f64> {
    vec![1.0 / n as f64; n]
}

#[test]
fn criterion_01_fidelity_bound_with_and_without_rescaling() {
    let mut c = Criterion::new("criterion 1: fidelity bound on the ones-row matrix");
    let a = generate(MatrixFamily::OnesRowIdentity { n: 10, eps: 0.01 }).unwrap();
    let p = a.column_normalized().unwrap();

    let (n, eps) = (10.0f64, 0.01f64);
    let f1_closed = (1.0 + eps.sqrt() + (n - 2.0) * eps)
        / ((1.0 + (n - 1.0) * eps).sqrt() * (2.0 + (n - 2.0) * eps).sqrt());
    let f2_closed = (1.0 + 2.0 * eps.sqrt() + (n - 3.0) * eps) / (2.0 + (n - 2.0) * eps);
    let f1 = classical_fidelity(&p.column_distribution(0), &p.column_distribution(4)).unwrap();
    let f2 = classical_fidelity(&p.column_distribution(1), &p.column_distribution(6)).unwrap();
    c.check("f1 closed form to 1e-9", approx(f1, f1_closed, 1e-9));
    c.check("f2 closed form to 1e-9", approx(f2, f2_closed, 1e-9));

    // The printed 2.09 rounds the closed-form 2.0878...; the uniform-q value
    // must reproduce the closed form and the closed form the printed digits.
    let closed = 100.0 / (10.0 + 18.0 * f1_closed * f1_closed + 72.0 * f2_closed * f2_closed);
    let b3_uniform = bound_b3(&a, &cfg(), Some(&uniform(10))).unwrap().value;
    c.check("uniform-q value meets the closed form", b3_uniform >= closed - 1e-9);
    c.check("closed form prints as 2.09", approx(closed, 2.09, 0.01));

    let mut d = vec![10.0; 10];
    d[0] = 0.0;
    let rescaled = rescaled_bound(&a, InnerBound::B3, &cfg(), Some(&d)).unwrap();
    c.check("rescaled fidelity bound >= 4.88", rescaled.value >= 4.88);
    c.finish();
}

#[test]
fn criterion_02_row_maxima_bound_and_integer_comparison() {
    let mut c = Criterion::new("criterion 2: row-maxima bound and the 9 vs 4 vs 6 comparison");
    let a = generate(MatrixFamily::OnesRowIdentity { n: 10, eps: 0.01 }).unwrap();
    let b4 = bound_b4(&a).unwrap().value;
    c.check("B4 ~ 5.24", approx(b4, 5.24, 0.01));

    let mut d = vec![10.0; 10];
    d[0] = 0.0;
    let b4r = rescaled_bound(&a, InnerBound::B4, &cfg(), Some(&d)).unwrap().value;
    c.check("B4' >= 8.33", b4r >= 8.33);
    c.check("B4' implies PSD-rank >= 9", b4r.ceil() == 9.0);

    let b1 = bound_b1(&a, &tol()).unwrap().value;
    c.check("B1 ~ 3.16", approx(b1, 3.16, 0.01));
    c.check("B1 integer bound is 4", b1.ceil() == 4.0);

    // The published 6 is the entropy bound of the rescaled matrix.
    let b2r = bound_b2(&a.row_scaled(&d).unwrap()).unwrap().value;
    c.check("B2 (rescaled) integer bound is 6", b2r.ceil() == 6.0);
    c.finish();
}

#[test]
fn criterion_03_combined_bound_beats_row_maxima() {
    let mut c = Criterion::new("criterion 3: combined bound on the cyclic-pair matrix");
    let n = 10usize;
    let a = generate(MatrixFamily::CyclicPairIdentity { n, eps: 0.01 }).unwrap();
    let b4 = bound_b4(&a).unwrap().value;
    c.check("B4 ~ 4.81", approx(b4, 4.81, 0.01));

    let overrides: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut q = vec![0.0; n];
            q[i] = 0.5;
            q[(i + 1) % n] = 0.5;
            q
        })
        .collect();
    let b5 = bound_b5(&a, &cfg(), Some(&overrides)).unwrap().value;
    c.check("B5 with half/half q >= 5.36", b5 >= 5.36);
    c.finish();
}

#[test]
fn criterion_04_comparison_matrices() {
    let mut c = Criterion::new("criterion 4: bound comparisons across the three matrices");

    // Unit diagonal with eps = 1/n: the row-maxima bound is exactly (n+1)/2.
    for n in [4usize, 10, 16] {
        let a = generate(MatrixFamily::EpsIdentity {
            n: n + 1,
            eps: 1.0 / n as f64,
        })
        .unwrap();
        let b4 = bound_b4(&a).unwrap().value;
        let b2 = bound_b2(&a).unwrap().value;
        let nf = n as f64;
        c.check(
            &format!("B4 = (n+1)/2 exactly at n={n}"),
            approx(b4, (nf + 1.0) / 2.0, 1e-12),
        );
        c.check(
            &format!("B2 = (n+1)/(2 sqrt n) at n={n}"),
            approx(b2, (nf + 1.0) / (2.0 * nf.sqrt()), 0.01),
        );
    }

    let a = generate(MatrixFamily::TridiagonalBlend { n: 10, eps: 0.001 }).unwrap();
    c.check(
        "tridiagonal: B3 uniform >= 4.52",
        bound_b3(&a, &cfg(), Some(&uniform(10))).unwrap().value >= 4.52,
    );
    c.check(
        "tridiagonal: B1 ~ 3.16",
        approx(bound_b1(&a, &tol()).unwrap().value, 3.16, 0.01),
    );
    c.check(
        "tridiagonal: B2 ~ 3.42",
        approx(bound_b2(&a).unwrap().value, 3.42, 0.01),
    );
    c.check(
        "tridiagonal: B4 ~ 3.99",
        approx(bound_b4(&a).unwrap().value, 3.99, 0.01),
    );

    let a = generate(MatrixFamily::EpsIdentity { n: 10, eps: 0.9 }).unwrap();
    c.check(
        "weak case: B1 ~ 3.16",
        approx(bound_b1(&a, &tol()).unwrap().value, 3.16, 0.01),
    );
    c.check(
        "weak case: B2 ~ 1.0005",
        approx(bound_b2(&a).unwrap().value, 1.0005, 1e-3),
    );
    c.check(
        "weak case: B4 ~ 1.099",
        approx(bound_b4(&a).unwrap().value, 1.099, 1e-3),
    );
    c.check(
        "weak case: B5 heuristic < 1.1",
        bound_b5(&a, &cfg(), None).unwrap().value < 1.1,
    );
    c.finish();
}

#[test]
fn criterion_05_hexagon_slack_matrix() {
    let mut c = Criterion::new("criterion 5: hexagon slack matrix");
    let a = generate(MatrixFamily::HexagonSlack).unwrap();
    c.check(
        "B1 = sqrt(3) within 1e-9",
        approx(bound_b1(&a, &tol()).unwrap().value, 3f64.sqrt(), 1e-9),
    );
    c.check(
        "B2 ~ 1.59",
        approx(bound_b2(&a).unwrap().value, 1.59, 0.01),
    );
    c.check(
        "B4 = 2 exactly",
        approx(bound_b4(&a).unwrap().value, 2.0, 1e-12),
    );
    c.check(
        "B3 uniform > 2.1",
        bound_b3(&a, &cfg(), Some(&uniform(6))).unwrap().value > 2.1,
    );
    c.finish();
}

#[test]
fn criterion_06_nonequality_factorizations() {
    let mut c = Criterion::new("criterion 6: nonequality factorizations and tightness");
    for n in [3usize, 5, 7] {
        let fact = ne_factorization_odd(n).unwrap();
        let target = generate(MatrixFamily::Derangement { n: n * n }).unwrap();
        let report = verify(&fact, &target, &tol()).unwrap();
        c.check(&format!("odd n={n}: size is n"), fact.size() == n);
        c.check(
            &format!("odd n={n}: max error < 1e-12"),
            report.max_abs_error < 1e-12 && report.all_psd,
        );
        let b1 = bound_b1(&target, &tol()).unwrap().value;
        c.check(
            &format!("odd n={n}: rank bound matches the size (tight)"),
            approx(b1, n as f64, 1e-9),
        );
    }
    for n in [2usize, 4] {
        let fact = ne_factorization_even(n).unwrap();
        let target = generate(MatrixFamily::Derangement { n: n * n - 1 }).unwrap();
        let report = verify(&fact, &target, &tol()).unwrap();
        c.check(&format!("even n={n}: size is n"), fact.size() == n);
        c.check(
            &format!("even n={n}: max error < 1e-12"),
            report.max_abs_error < 1e-12 && report.all_psd,
        );
    }
    let fact = ne_factorization_odd(3).unwrap();
    let real = realify(&fact).unwrap();
    let target = generate(MatrixFamily::Derangement { n: 9 }).unwrap();
    let report = verify(&real, &target, &tol()).unwrap();
    c.check("realified size doubles", real.size() == 6);
    c.check("realified field is real", real.field() == Field::Real);
    c.check(
        "realified still verifies",
        report.max_abs_error < 1e-10 && report.all_psd,
    );
    c.finish();
}

#[test]
fn criterion_07_constant_diagonal_factorizations() {
    let mut c = Criterion::new("criterion 7: constant-diagonal factorizations within ceilings");
    let cases: [(usize, f64, usize); 5] = [
        (9, 3.0, 18),
        (25, 4.0, 40),
        (10, 2.0, 6),
        (9, 2.5, 18),
        (16, 0.5, 7),
    ];
    for (n, cc, ceiling) in cases {
        let fact = mc_factorization(n, cc).unwrap();
        let target = generate(MatrixFamily::Mc { n, c: cc }).unwrap();
        let report = verify(&fact, &target, &tol()).unwrap();
        c.check(
            &format!("(n={n}, c={cc}): verifies within 1e-10"),
            report.max_abs_error < 1e-10 && report.all_psd,
        );
        c.check(
            &format!("(n={n}, c={cc}): size {} <= {ceiling}", fact.size()),
            fact.size() <= ceiling,
        );
    }
    c.finish();
}

#[test]
fn criterion_08_inner_product() {
    let mut c = Criterion::new("criterion 8: inner-product sign matrices and protocol");
    for n in [2usize, 3, 4, 5] {
        let k = n.div_ceil(2);
        let m = ip_sign_matrix(n, k).unwrap();
        let target = generate(MatrixFamily::InnerProduct { n }).unwrap();
        let squared = hadamard_product(&m, &m.conjugate()).unwrap();
        c.check(
            &format!("n={n}: squared moduli match exactly"),
            squared.max_abs_diff(target.matrix()).unwrap() == 0.0,
        );
        let rank = numeric_rank(&m, &tol()).unwrap() as f64;
        let root_n = ((1usize << n) as f64).sqrt();
        let rank_cap = if n % 2 == 0 {
            2.0 * root_n - 1.0
        } else {
            1.5 * 2f64.sqrt() * root_n - 1.0
        };
        c.check(&format!("n={n}: rank {rank} within {rank_cap}"), rank <= rank_cap + 1e-9);
        let fact = hadamard_root_factorization(&m, &tol()).unwrap();
        let report = verify(&fact, &target, &tol()).unwrap();
        c.check(
            &format!("n={n}: root factorization verifies"),
            report.passes(&tol()),
        );
    }

    let n = 4;
    let target = generate(MatrixFamily::InnerProduct { n }).unwrap();
    let mut worst = 0.0f64;
    for xi in 0..16usize {
        for yi in 0..16usize {
            let x: Vec<u8> = (0..n).map(|b| ((xi >> (n - 1 - b)) & 1) as u8).collect();
            let y: Vec<u8> = (0..n).map(|b| ((yi >> (n - 1 - b)) & 1) as u8).collect();
            let out = ip_protocol(n, &x, &y, ProtocolMode::Exact).unwrap();
            worst = worst.max((out.expectation - target.get(xi, yi)).abs());
        }
    }
    c.check("protocol expectations equal the matrix entrywise", worst == 0.0);
    c.finish();
}

#[test]
fn criterion_09_disjointness_pinned() {
    let mut c = Criterion::new("criterion 9: disjointness pinned to 2^n");
    let base = disjointness_base_factorization(&tol()).unwrap();
    for n in 1..=4usize {
        let mut fact = base.clone();
        for _ in 1..n {
            fact = tensor_factorization(&fact, &base).unwrap();
        }
        let target = generate(MatrixFamily::Disjointness { n }).unwrap();
        let report = verify(&fact, &target, &tol()).unwrap();
        c.check(
            &format!("n={n}: tensor factorization of size 2^n verifies"),
            fact.size() == 1 << n && report.passes(&tol()),
        );
        let half = 1usize << (n - 1);
        let block = block_zero_bound(
            &target,
            BlockPartition {
                row_split: half,
                col_split: half,
            },
            LeafBound::B1,
            &tol(),
        )
        .unwrap();
        c.check(
            &format!("n={n}: recursive zero-block bound >= 2^n"),
            block.value >= (1u64 << n) as f64 - 1e-9,
        );
    }
    c.finish();
}

#[test]
fn criterion_10_tensor_pair_not_full() {
    let mut c = Criterion::new("criterion 10: sub-multiplicative tensor example");
    let sqrt2 = 2f64.sqrt();
    for a in [sqrt2 - 1.0, 0.5, 1.5, sqrt2 + 1.0] {
        let target = generate(MatrixFamily::TensorPair { a }).unwrap();
        let fact = not_full_factorization(&target, &tol()).unwrap();
        let report = verify(&fact, &target, &tol()).unwrap();
        c.check(
            &format!("a={a:.4}: size {} <= 3 and verifies", fact.size()),
            fact.size() <= 3 && report.passes(&tol()),
        );
    }
    let bad = generate(MatrixFamily::TensorPair { a: 0.1 }).unwrap();
    c.check(
        "a=0.1: dominant-entry columns detected",
        !has_no_dominant_entry_columns(&bad).iter().all(|&b| b),
    );
    c.check(
        "a=0.1: construction refuses with a precondition error",
        matches!(
            not_full_factorization(&bad, &tol()),
            Err(Error::Precondition(_))
        ),
    );
    c.finish();
}

#[test]
fn criterion_11a_state_overlap_vs_fidelity() {
    let mut c = Criterion::new("criterion 11a: Tr(sigma rho) <= F^2 on 1000 random state pairs");
    let mut rng = common::rng(101);
    let mut worst = f64::NEG_INFINITY;
    for i in 0..1000 {
        let dim = 2 + i % 5;
        let rho = common::random_density(&mut rng, dim);
        let sigma = common::random_density(&mut rng, dim);
        let overlap = sigma.matrix().trace_product(rho.matrix()).unwrap().re;
        let f = quantum_fidelity(&rho, &sigma).unwrap();
        worst = worst.max(overlap - f * f);
    }
    c.check(&format!("max violation {worst:.2e} <= 1e-10"), worst <= 1e-10);
    c.finish();
}

#[test]
fn criterion_11b_measurement_cannot_shrink_fidelity() {
    let mut c =
        Criterion::new("criterion 11b: classical fidelity >= quantum fidelity on 1000 POVMs");
    let mut rng = common::rng(202);
    let mut worst = f64::NEG_INFINITY;
    for i in 0..1000 {
        let dim = 2 + i % 5;
        let rho = common::random_density(&mut rng, dim);
        let sigma = common::random_density(&mut rng, dim);
        let povm = common::random_povm(&mut rng, dim, 2 + i % 3);
        let p = common::measure(&rho, &povm);
        let q = common::measure(&sigma, &povm);
        let cf = classical_fidelity(&p, &q).unwrap();
        let qf = quantum_fidelity(&rho, &sigma).unwrap();
        worst = worst.max(qf - cf);
    }
    c.check(&format!("max violation {worst:.2e} <= 1e-10"), worst <= 1e-10);
    c.finish();
}

#[test]
fn criterion_11c_trace_norm_bound_below_rank() {
    let mut c = Criterion::new("criterion 11c: trace-norm bound <= numeric rank, 1000 matrices");
    let mut rng = common::rng(303);
    let mut worst = f64::NEG_INFINITY;
    for i in 0..1000 {
        let rows = 1 + i % 6;
        let cols = 1 + (i / 7) % 6;
        let m = if i % 2 == 0 {
            common::random_complex_matrix(&mut rng, rows, cols)
        } else {
            common::random_real_matrix(&mut rng, rows, cols)
        };
        let bound = trace_norm_rank_bound(&m).unwrap();
        let rank = numeric_rank(&m, &tol()).unwrap() as f64;
        worst = worst.max(bound - rank);
    }
    c.check(&format!("max violation {worst:.2e} <= 1e-8"), worst <= 1e-8);
    c.finish();
}

#[test]
fn criterion_11d_povm_normal_form_postconditions() {
    let mut c = Criterion::new("criterion 11d: POVM normal form postconditions, 1000 instances");
    let mut rng = common::rng(404);
    let mut worst_sum = 0.0f64;
    let mut worst_trace = 0.0f64;
    let mut worst_verify = 0.0f64;
    for i in 0..1000 {
        let rows = 2 + i % 3;
        let cols = 2 + (i / 3) % 3;
        let r = 2 + i % 2;
        let (fact, target) = common::random_factorization(&mut rng, rows, cols, r, i % 2 == 0);
        // Scale the F side so the target is stochastic.
        let sums = target.column_sums();
        let f_scaled: Vec<Matrix> = fact
            .f_factors()
            .iter()
            .zip(&sums)
            .map(|(f, &s)| f.scale(1.0 / s))
            .collect();
        let scaled_fact =
            psdrank::factor::PsdFactorization::new(fact.e_factors().to_vec(), f_scaled).unwrap();
        let stochastic = target.column_normalized().unwrap();
        let normal = normalize_to_povm_form(&scaled_fact, &stochastic, &tol()).unwrap();
        let nf = &normal.factorization;
        assert_eq!(nf.size(), r, "size preserved");

        let dim = nf.size();
        let mut sum = Matrix::zeros(dim, dim, Field::Complex);
        for e in nf.e_factors() {
            sum = sum.add(e).unwrap();
        }
        worst_sum = worst_sum.max(sum.max_abs_diff(&Matrix::identity(dim)).unwrap());
        for f in nf.f_factors() {
            worst_trace = worst_trace.max((f.trace().re - 1.0).abs().max(f.trace().im.abs()));
        }
        let plain = NonnegativeMatrix::new(stochastic.matrix().clone()).unwrap();
        let report = verify(nf, &plain, &tol()).unwrap();
        worst_verify = worst_verify.max(report.max_abs_error);
    }
    c.check(&format!("E sums to identity ({worst_sum:.2e})"), worst_sum <= 1e-9);
    c.check(&format!("F traces are one ({worst_trace:.2e})"), worst_trace <= 1e-9);
    c.check(
        &format!("normal form still verifies ({worst_verify:.2e})"),
        worst_verify <= 1e-9,
    );
    c.finish();
}

#[test]
fn criterion_11e_bounds_below_known_factorization_size() {
    let mut c = Criterion::new("criterion 11e: every bound <= known factorization size, 1000 runs");
    let mut rng = common::rng(505);
    let mut worst = f64::NEG_INFINITY;
    let light = light_cfg();
    for i in 0..1000 {
        let rows = 2 + i % 4;
        let cols = 2 + (i / 5) % 4;
        let r = 1 + i % 3;
        let complex = i % 2 == 0;
        let (_, target) = common::random_factorization(&mut rng, rows, cols, r, complex);
        if target.is_zero() {
            continue;
        }
        let size = r as f64;
        let mut values = vec![
            bound_b1(&target, &tol()).unwrap().value,
            bound_b2(&target).unwrap().value,
            bound_b3(&target, &light, None).unwrap().value,
            bound_b4(&target).unwrap().value,
            bound_b5(&target, &light, None).unwrap().value,
        ];
        if !complex {
            // The real-rank variant only bounds the real PSD-rank, so it is
            // compared only against real factorizations.
            values.push(bound_b1_real(&target, &tol()).unwrap().value);
        }
        for v in values {
            worst = worst.max(v - size);
        }
    }
    c.check(&format!("max violation {worst:.2e} <= 1e-6"), worst <= 1e-6);
    c.finish();
}

#[test]
fn criterion_11f_certificates_replay() {
    let mut c = Criterion::new("criterion 11f: certificates reproduce reported values, 1000 runs");
    let mut rng = common::rng(606);
    let mut worst = 0.0f64;
    let light = light_cfg();
    for i in 0..1000 {
        let rows = 2 + i % 4;
        let cols = 2 + (i / 5) % 4;
        let m = Matrix::from_fn_real(rows, cols, |_, _| {
            use rand::Rng;
            rng.random::<f64>() + 0.01
        });
        let a = NonnegativeMatrix::new(m).unwrap();
        let b3 = bound_b3(&a, &light, None).unwrap();
        let q = b3.certificate.as_ref().unwrap().q.as_ref().unwrap();
        worst = worst.max((eval_b3_certificate(&a, q).unwrap() - b3.value).abs());

        let b5 = bound_b5(&a, &light, None).unwrap();
        let qs = b5.certificate.as_ref().unwrap().row_q.as_ref().unwrap();
        worst = worst.max((eval_b5_certificates(&a, qs).unwrap() - b5.value).abs());

        if i % 25 == 0 {
            // The rescaling search is costlier; sample it.
            let rescaled = rescaled_bound(&a, InnerBound::B3, &light, None).unwrap();
            let cert = rescaled.certificate.as_ref().unwrap();
            worst = worst
                .max((eval_rescaled_certificate(&a, InnerBound::B3, cert).unwrap() - rescaled.value).abs());
            let rescaled4 = rescaled_bound(&a, InnerBound::B4, &light, None).unwrap();
            let cert4 = rescaled4.certificate.as_ref().unwrap();
            worst = worst.max(
                (eval_rescaled_certificate(&a, InnerBound::B4, cert4).unwrap() - rescaled4.value)
                    .abs(),
            );
        }
    }
    c.check(&format!("max replay deviation {worst:.2e} <= 1e-9"), worst <= 1e-9);
    c.finish();
}

/// Quantum fidelity of diagonal states equals the classical fidelity of the
/// diagonals; exercised here because criterion 11b relies on it.
#[test]
fn diagonal_states_bridge_classical_and_quantum() {
    let p = vec![0.5, 0.25, 0.25];
    let q = vec![0.1, 0.6, 0.3];
    let dp = DensityMatrix::from_distribution(&p).unwrap();
    let dq = DensityMatrix::from_distribution(&q).unwrap();
    let qf = quantum_fidelity(&dp, &dq).unwrap();
    let cf = classical_fidelity(&p, &q).unwrap();
    assert!((qf - cf).abs() < 1e-10);
}
