//! Reproduction reports: regenerate a cataloged matrix, run the cited
//! bounds or constructions with the documented certificates, and compare
//! against the published reference values.

use serde::{Deserialize, Serialize};

use crate::bounds::{
    block_zero_bound, bound_b1, bound_b2, bound_b3, bound_b4, bound_b5, rescaled_bound,
    BlockPartition, InnerBound, SimplexOptConfig,
};
use crate::error::{Error, Result};
use crate::factor::{
    hadamard_root_factorization, ip_sign_matrix, mc_factorization, ne_factorization_even,
    ne_factorization_odd, realify, tensor_factorization, verify, PsdFactorization,
};
use crate::families::{generate, MatrixFamily};
use crate::fidelity::classical_fidelity;
use crate::matrix::hadamard_product;
use crate::nonneg::NonnegativeMatrix;
use crate::protocol::{ip_protocol, ProtocolMode};
use crate::spectral::numeric_rank;
use crate::tol::ToleranceConfig;

pub const EXAMPLE_IDS: [&str; 11] = [
    "ex4.4", "ex4.7", "ex4.10", "ex5.1", "ex5.2", "ex5.3", "ex5.4", "ne", "mc", "ip", "disj",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Geq,
    #[serde(rename = ">")]
    Greater,
    #[serde(rename = "~")]
    Approx,
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "<=")]
    Leq,
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Relation::Geq => ">=",
            Relation::Greater => ">",
            Relation::Approx => "~",
            Relation::Equal => "=",
            Relation::Less => "<",
            Relation::Leq => "<=",
        };
        f.write_str(s)
    }
}

/// One comparison row: `computed_value <relation> reference_value`, with
/// `tolerance` applying to the approximate and equality relations.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReproductionRow {
    pub quantity: String,
    pub reference_value: f64,
    pub computed_value: f64,
    pub relation: Relation,
    pub tolerance: f64,
    pub pass: bool,
}

impl ReproductionRow {
    fn new(
        quantity: &str,
        reference_value: f64,
        computed_value: f64,
        relation: Relation,
        tolerance: f64,
    ) -> Self {
        let pass = match relation {
            Relation::Geq => computed_value >= reference_value,
            Relation::Greater => computed_value > reference_value,
            Relation::Approx | Relation::Equal => {
                (computed_value - reference_value).abs() <= tolerance
            }
            Relation::Less => computed_value < reference_value,
            Relation::Leq => computed_value <= reference_value,
        };
        Self {
            quantity: quantity.to_string(),
            reference_value,
            computed_value,
            relation,
            tolerance,
            pass,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReproductionReport {
    pub example_id: String,
    pub rows: Vec<ReproductionRow>,
    pub pass: bool,
}

impl ReproductionReport {
    fn from_rows(example_id: &str, rows: Vec<ReproductionRow>) -> Self {
        let pass = rows.iter().all(|r| r.pass);
        Self {
            example_id: example_id.to_string(),
            rows,
            pass,
        }
    }
}

const APPROX_TOL: f64 = 0.01;

/// Replays one cataloged example end to end.
pub fn reproduce(example_id: &str, seed: u64) -> Result<ReproductionReport> {
    let tol = ToleranceConfig::default();
    let cfg = SimplexOptConfig {
        seed,
        ..SimplexOptConfig::default()
    };
    let rows = match example_id {
        "ex4.4" => reproduce_ones_row_fidelity(&cfg)?,
        "ex4.7" => reproduce_ones_row_maxima(&tol, &cfg)?,
        "ex4.10" => reproduce_cyclic_pair(&cfg)?,
        "ex5.1" => reproduce_eps_identity_equality()?,
        "ex5.2" => reproduce_tridiagonal(&tol, &cfg)?,
        "ex5.3" => reproduce_weak_bounds(&tol, &cfg)?,
        "ex5.4" => reproduce_hexagon(&tol, &cfg)?,
        "ne" => reproduce_nonequality(&tol)?,
        "mc" => reproduce_constant_diagonal(&tol)?,
        "ip" => reproduce_inner_product(&tol)?,
        "disj" => reproduce_disjointness(&tol)?,
        other => {
            return Err(Error::Domain(format!(
                "unknown example id '{other}'; known: {}",
                EXAMPLE_IDS.join(", ")
            )))
        }
    };
    Ok(ReproductionReport::from_rows(example_id, rows))
}

fn ones_row_matrix() -> Result<NonnegativeMatrix> {
    generate(MatrixFamily::OnesRowIdentity { n: 10, eps: 0.01 })
}

fn uniform(n: usize) -> Vec<f64> {
    vec![1.0 / n as f64; n]
}

fn zero_first_row_scaling(n: usize) -> Vec<f64> {
    let mut d = vec![10.0; n];
    d[0] = 0.0;
    d
}

fn reproduce_ones_row_fidelity(cfg: &SimplexOptConfig) -> Result<Vec<ReproductionRow>> {
    let a = ones_row_matrix()?;
    let (n, eps) = (10.0f64, 0.01f64);
    let p = a.column_normalized()?;

    let f1_closed = (1.0 + eps.sqrt() + (n - 2.0) * eps)
        / ((1.0 + (n - 1.0) * eps).sqrt() * (2.0 + (n - 2.0) * eps).sqrt());
    let f1 = classical_fidelity(&p.column_distribution(0), &p.column_distribution(3))?;
    let f2_closed = (1.0 + 2.0 * eps.sqrt() + (n - 3.0) * eps) / (2.0 + (n - 2.0) * eps);
    let f2 = classical_fidelity(&p.column_distribution(2), &p.column_distribution(7))?;

    let b3_uniform = bound_b3(&a, cfg, Some(&uniform(10)))?;
    let rescaled = rescaled_bound(&a, InnerBound::B3, cfg, Some(&zero_first_row_scaling(10)))?;

    // The published 2.09 is the closed-form expression rounded up from
    // 2.0878..., so the uniform-q value is checked against the expression
    // itself and the expression against the printed digits.
    let closed_form = 100.0 / (10.0 + 2.0 * 9.0 * f1_closed.powi(2) + 8.0 * 9.0 * f2_closed.powi(2));

    Ok(vec![
        ReproductionRow::new("first-column fidelity f1", f1_closed, f1, Relation::Equal, 1e-9),
        ReproductionRow::new("off-column fidelity f2", f2_closed, f2, Relation::Equal, 1e-9),
        ReproductionRow::new(
            "B3 with uniform q (closed form)",
            closed_form - 1e-9,
            b3_uniform.value,
            Relation::Geq,
            0.0,
        ),
        ReproductionRow::new(
            "closed form rounds to the printed 2.09",
            2.09,
            closed_form,
            Relation::Approx,
            APPROX_TOL,
        ),
        ReproductionRow::new(
            "B3' with D = diag(0,10,...,10)",
            4.88,
            rescaled.value,
            Relation::Geq,
            0.0,
        ),
    ])
}

fn reproduce_ones_row_maxima(
    tol: &ToleranceConfig,
    cfg: &SimplexOptConfig,
) -> Result<Vec<ReproductionRow>> {
    let a = ones_row_matrix()?;
    let b4 = bound_b4(&a)?;
    let b4_rescaled = rescaled_bound(&a, InnerBound::B4, cfg, Some(&zero_first_row_scaling(10)))?;
    let b1 = bound_b1(&a, tol)?;
    // Rescaling never increases the PSD-rank, so the entropy bound of the
    // rescaled matrix (≈ 5.83, hence 6) is the published comparison point;
    // on the raw matrix the entropy bound is only ≈ 2.45.
    let b2_rescaled = bound_b2(&a.row_scaled(&zero_first_row_scaling(10))?)?;
    Ok(vec![
        ReproductionRow::new("B4", 5.24, b4.value, Relation::Approx, APPROX_TOL),
        ReproductionRow::new(
            "B4' with D = diag(0,10,...,10)",
            8.33,
            b4_rescaled.value,
            Relation::Geq,
            0.0,
        ),
        ReproductionRow::new("B1", 3.16, b1.value, Relation::Approx, APPROX_TOL),
        ReproductionRow::new(
            "integer bound from B4'",
            9.0,
            b4_rescaled.value.ceil(),
            Relation::Equal,
            0.0,
        ),
        ReproductionRow::new("integer bound from B1", 4.0, b1.value.ceil(), Relation::Equal, 0.0),
        ReproductionRow::new(
            "integer bound from B2 (rescaled)",
            6.0,
            b2_rescaled.value.ceil(),
            Relation::Equal,
            0.0,
        ),
    ])
}

fn reproduce_cyclic_pair(cfg: &SimplexOptConfig) -> Result<Vec<ReproductionRow>> {
    let n = 10usize;
    let a = generate(MatrixFamily::CyclicPairIdentity { n, eps: 0.01 })?;
    let b4 = bound_b4(&a)?;
    // Half/half on the two unit entries of each row.
    let overrides: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut q = vec![0.0; n];
            q[i] = 0.5;
            q[(i + 1) % n] = 0.5;
            q
        })
        .collect();
    let b5 = bound_b5(&a, cfg, Some(&overrides))?;
    Ok(vec![
        ReproductionRow::new("B4", 4.81, b4.value, Relation::Approx, APPROX_TOL),
        ReproductionRow::new("B5 with half/half q", 5.36, b5.value, Relation::Geq, 0.0),
    ])
}

fn reproduce_eps_identity_equality() -> Result<Vec<ReproductionRow>> {
    let n = 10usize;
    let a = generate(MatrixFamily::EpsIdentity {
        n: n + 1,
        eps: 1.0 / n as f64,
    })?;
    let b4 = bound_b4(&a)?;
    let b2 = bound_b2(&a)?;
    let nf = n as f64;
    Ok(vec![
        ReproductionRow::new(
            "B4 at eps = 1/n (exact)",
            (nf + 1.0) / 2.0,
            b4.value,
            Relation::Equal,
            1e-9,
        ),
        ReproductionRow::new(
            "B2 closed form",
            (nf + 1.0) / (2.0 * nf.sqrt()),
            b2.value,
            Relation::Approx,
            APPROX_TOL,
        ),
    ])
}

fn reproduce_tridiagonal(
    tol: &ToleranceConfig,
    cfg: &SimplexOptConfig,
) -> Result<Vec<ReproductionRow>> {
    let a = generate(MatrixFamily::TridiagonalBlend { n: 10, eps: 0.001 })?;
    let b3 = bound_b3(&a, cfg, Some(&uniform(10)))?;
    let b1 = bound_b1(&a, tol)?;
    let b2 = bound_b2(&a)?;
    let b4 = bound_b4(&a)?;
    Ok(vec![
        ReproductionRow::new("B3 with uniform q", 4.52, b3.value, Relation::Geq, 0.0),
        ReproductionRow::new("B1", 3.16, b1.value, Relation::Approx, APPROX_TOL),
        ReproductionRow::new("B2", 3.42, b2.value, Relation::Approx, APPROX_TOL),
        ReproductionRow::new("B4", 3.99, b4.value, Relation::Approx, APPROX_TOL),
    ])
}

fn reproduce_weak_bounds(
    tol: &ToleranceConfig,
    cfg: &SimplexOptConfig,
) -> Result<Vec<ReproductionRow>> {
    let a = generate(MatrixFamily::EpsIdentity { n: 10, eps: 0.9 })?;
    let b1 = bound_b1(&a, tol)?;
    let b2 = bound_b2(&a)?;
    let b4 = bound_b4(&a)?;
    let b5 = bound_b5(&a, cfg, None)?;
    Ok(vec![
        ReproductionRow::new("B1", 3.16, b1.value, Relation::Approx, APPROX_TOL),
        ReproductionRow::new("B2", 1.0005, b2.value, Relation::Approx, 1e-3),
        ReproductionRow::new("B4", 1.099, b4.value, Relation::Approx, 1e-3),
        ReproductionRow::new("B5 heuristic stays small", 1.1, b5.value, Relation::Less, 0.0),
    ])
}

fn reproduce_hexagon(
    tol: &ToleranceConfig,
    cfg: &SimplexOptConfig,
) -> Result<Vec<ReproductionRow>> {
    let a = generate(MatrixFamily::HexagonSlack)?;
    let b1 = bound_b1(&a, tol)?;
    let b2 = bound_b2(&a)?;
    let b4 = bound_b4(&a)?;
    let b3 = bound_b3(&a, cfg, Some(&uniform(6)))?;
    Ok(vec![
        ReproductionRow::new("B1 = sqrt(3)", 3f64.sqrt(), b1.value, Relation::Equal, 1e-9),
        ReproductionRow::new("B2", 1.59, b2.value, Relation::Approx, APPROX_TOL),
        ReproductionRow::new("B4 (exact)", 2.0, b4.value, Relation::Equal, 1e-12),
        ReproductionRow::new("B3 with uniform q", 2.1, b3.value, Relation::Greater, 0.0),
    ])
}

fn verify_error(
    fact: &PsdFactorization,
    target: &NonnegativeMatrix,
    tol: &ToleranceConfig,
) -> Result<f64> {
    let report = verify(fact, target, tol)?;
    if !report.all_psd {
        return Err(Error::Domain("factor failed the PSD check".into()));
    }
    Ok(report.max_abs_error)
}

fn reproduce_nonequality(tol: &ToleranceConfig) -> Result<Vec<ReproductionRow>> {
    let mut rows = Vec::new();
    let odd = ne_factorization_odd(3)?;
    let target9 = generate(MatrixFamily::Derangement { n: 9 })?;
    rows.push(ReproductionRow::new(
        "odd construction size (n = 3)",
        3.0,
        odd.size() as f64,
        Relation::Equal,
        0.0,
    ));
    rows.push(ReproductionRow::new(
        "odd construction max error",
        1e-12,
        verify_error(&odd, &target9, tol)?,
        Relation::Less,
        0.0,
    ));
    let b1 = bound_b1(&target9, tol)?;
    rows.push(ReproductionRow::new(
        "B1 matches the size (tight)",
        odd.size() as f64,
        b1.value,
        Relation::Equal,
        1e-9,
    ));
    let even = ne_factorization_even(2)?;
    let target3 = generate(MatrixFamily::Derangement { n: 3 })?;
    rows.push(ReproductionRow::new(
        "even construction size (n = 2)",
        2.0,
        even.size() as f64,
        Relation::Equal,
        0.0,
    ));
    rows.push(ReproductionRow::new(
        "even construction max error",
        1e-12,
        verify_error(&even, &target3, tol)?,
        Relation::Less,
        0.0,
    ));
    let real = realify(&odd)?;
    rows.push(ReproductionRow::new(
        "realified size doubles",
        6.0,
        real.size() as f64,
        Relation::Equal,
        0.0,
    ));
    rows.push(ReproductionRow::new(
        "realified max error",
        1e-10,
        verify_error(&real, &target9, tol)?,
        Relation::Less,
        0.0,
    ));
    Ok(rows)
}

fn reproduce_constant_diagonal(tol: &ToleranceConfig) -> Result<Vec<ReproductionRow>> {
    let mut rows = Vec::new();
    for (n, c, ceiling) in [(9usize, 3.0f64, 18.0f64), (10, 2.0, 6.0), (9, 2.5, 18.0)] {
        let fact = mc_factorization(n, c)?;
        let target = generate(MatrixFamily::Mc { n, c })?;
        rows.push(ReproductionRow::new(
            &format!("size within ceiling (n={n}, c={c})"),
            ceiling,
            fact.size() as f64,
            Relation::Leq,
            0.0,
        ));
        rows.push(ReproductionRow::new(
            &format!("verification error (n={n}, c={c})"),
            1e-10,
            verify_error(&fact, &target, tol)?,
            Relation::Less,
            0.0,
        ));
    }
    Ok(rows)
}

fn reproduce_inner_product(tol: &ToleranceConfig) -> Result<Vec<ReproductionRow>> {
    let (n, k) = (4usize, 2usize);
    let target = generate(MatrixFamily::InnerProduct { n })?;
    let m = ip_sign_matrix(n, k)?;
    let squared = hadamard_product(&m, &m.conjugate())?;
    let exact_dev = squared.max_abs_diff(target.matrix())?;
    let rank = numeric_rank(&m, tol)? as f64;
    let fact = hadamard_root_factorization(&m, tol)?;
    let verify_err = verify_error(&fact, &target, tol)?;

    let mut worst_protocol_dev = 0.0f64;
    for xi in 0..16usize {
        for yi in 0..16usize {
            let x: Vec<u8> = (0..n).map(|b| ((xi >> (n - 1 - b)) & 1) as u8).collect();
            let y: Vec<u8> = (0..n).map(|b| ((yi >> (n - 1 - b)) & 1) as u8).collect();
            let out = ip_protocol(n, &x, &y, ProtocolMode::Exact)?;
            worst_protocol_dev = worst_protocol_dev.max((out.expectation - target.get(xi, yi)).abs());
        }
    }

    Ok(vec![
        ReproductionRow::new("sign matrix squared moduli match", 0.0, exact_dev, Relation::Equal, 0.0),
        ReproductionRow::new("sign matrix rank (2 sqrt(N) − 1)", 7.0, rank, Relation::Leq, 0.0),
        ReproductionRow::new("root factorization error", 1e-9, verify_err, Relation::Less, 0.0),
        ReproductionRow::new(
            "protocol expectation deviation",
            1e-12,
            worst_protocol_dev,
            Relation::Less,
            0.0,
        ),
    ])
}

fn reproduce_disjointness(tol: &ToleranceConfig) -> Result<Vec<ReproductionRow>> {
    let n = 3usize;
    let d1_fact = disjointness_base_factorization(tol)?;
    let mut fact = d1_fact.clone();
    for _ in 1..n {
        fact = tensor_factorization(&fact, &d1_fact)?;
    }
    let target = generate(MatrixFamily::Disjointness { n })?;
    let size = fact.size() as f64;
    let err = verify_error(&fact, &target, tol)?;
    let half = 1usize << (n - 1);
    let block = block_zero_bound(
        &target,
        BlockPartition {
            row_split: half,
            col_split: half,
        },
        crate::bounds::LeafBound::B1,
        tol,
    )?;
    Ok(vec![
        ReproductionRow::new("tensor factorization size", 8.0, size, Relation::Equal, 0.0),
        ReproductionRow::new("tensor factorization error", 1e-9, err, Relation::Less, 0.0),
        ReproductionRow::new("recursive zero-block bound", 8.0, block.value, Relation::Geq, 0.0),
    ])
}

/// Size-2 factorization of the one-bit disjointness matrix `[[1,1],[1,0]]`.
pub fn disjointness_base_factorization(tol: &ToleranceConfig) -> Result<PsdFactorization> {
    // M = [[1, 1], [1, 0]] is its own Hadamard root and has rank 2.
    let m = crate::matrix::Matrix::from_rows_real(&[vec![1.0, 1.0], vec![1.0, 0.0]])?;
    hadamard_root_factorization(&m, tol)
}
