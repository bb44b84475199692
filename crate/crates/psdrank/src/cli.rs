//! Command-line surface: `gen`, `bounds`, `factorize`, `verify`,
//! `protocol`, and `reproduce`. Exit codes: 0 success, 1 a verification or
//! reproduction failed, 2 usage or input-format error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bounds::{
    block_zero_bound, bound_b1, bound_b1_real, bound_b2, bound_b3, bound_b4, bound_b5,
    rescaled_bound, BlockPartition, BoundReport, InnerBound, LeafBound, SimplexOptConfig,
    StepRule,
};
use crate::error::Error;
use crate::factor::{
    hadamard_root_factorization, ip_sign_matrix, mc_factorization, ne_factorization_even,
    ne_factorization_odd, not_full_factorization, realify, tensor_factorization, verify,
    PsdFactorization,
};
use crate::families::{generate, MatrixFamily};
use crate::io;
use crate::nonneg::NonnegativeMatrix;
use crate::protocol::{evaluate_protocol, ip_protocol, ProtocolMode};
use crate::report::{reproduce, EXAMPLE_IDS};
use crate::tol::ToleranceConfig;

pub const REPORT_SCHEMA: u64 = 1;

#[derive(Parser)]
#[command(
    name = "psdrank",
    version,
    about = "Lower bounds and explicit factorizations for the PSD-rank of nonnegative matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a matrix from a named family.
    Gen(GenArgs),
    /// Compute lower bounds on the PSD-rank of a matrix.
    Bounds(BoundsArgs),
    /// Construct an explicit PSD factorization.
    Factorize(FactorizeArgs),
    /// Check a factorization against a target matrix.
    Verify(VerifyArgs),
    /// Run protocols built on factorizations.
    #[command(subcommand)]
    Protocol(ProtocolCommand),
    /// Replay a cataloged worked example and compare reference values.
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct GenArgs {
    /// derangement | eps-identity | mc | inner-product | disjointness |
    /// hexagon-slack | tensor-pair | ex4.4 | ex4.10 | ex5.1 | ex5.2 | ex5.3
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    matrix: PathBuf,
    /// Comma-separated subset of b1,b1r,b2,b3,b4,b5.
    #[arg(long, default_value = "b1,b1r,b2,b3,b4,b5")]
    bounds: String,
    /// Also search diagonal rescalings for b3/b4/b5.
    #[arg(long)]
    rescale: bool,
    #[arg(long)]
    restarts: Option<usize>,
    #[arg(long)]
    max_iters: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Distribution file: an array (q for b3) or array of arrays (per-row
    /// q for b5).
    #[arg(long)]
    q_file: Option<PathBuf>,
    /// Also evaluate the transposed matrix and report the better side.
    #[arg(long)]
    also_transpose: bool,
    /// Row,column split exposing a zero lower-right block; adds the
    /// recursive additive bound.
    #[arg(long, value_name = "K,L")]
    block_split: Option<String>,
    /// Leaf bound for --block-split: b1 | b2 | b3 | b4.
    #[arg(long, default_value = "b1")]
    block_leaf: String,
    #[arg(long)]
    rank_threshold: Option<f64>,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct FactorizeArgs {
    /// ne | mc | ip | not-full | disj
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    c: Option<f64>,
    /// Block split parameter for ip (defaults to ⌈n/2⌉).
    #[arg(long)]
    k: Option<usize>,
    /// Input matrix for not-full.
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Emit the real doubled factorization instead of the complex one.
    #[arg(long)]
    real: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long)]
    factorization: PathBuf,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ProtocolCommand {
    /// Exact or sampled run of the inner-product protocol.
    Ip(ProtocolIpArgs),
    /// Measure one column state of a POVM-normal-form factorization.
    Eval(ProtocolEvalArgs),
}

#[derive(Args)]
struct ProtocolIpArgs {
    #[arg(long)]
    n: usize,
    /// Bit string, e.g. 1010.
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: String,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct ProtocolEvalArgs {
    #[arg(long)]
    factorization: PathBuf,
    #[arg(long)]
    column: usize,
    /// JSON array of nonnegative output values, one per outcome.
    #[arg(long)]
    values: PathBuf,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct ReproduceArgs {
    /// One of the catalog ids; see --all.
    #[arg(long)]
    example: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    report: Option<PathBuf>,
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap already distinguishes help/version from usage errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) | Error::Parse(_) | Error::Dimension(_) | Error::Domain(_) => 2,
                Error::Precondition(_) => 1,
            }
        }
    }
}

fn default_seed(cli_seed: Option<u64>) -> u64 {
    cli_seed.unwrap_or_else(|| {
        std::env::var("PSDRANK_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(0)
    })
}

fn dispatch(cli: Cli) -> crate::Result<i32> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Factorize(args) => cmd_factorize(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Protocol(ProtocolCommand::Ip(args)) => cmd_protocol_ip(args),
        Command::Protocol(ProtocolCommand::Eval(args)) => cmd_protocol_eval(args),
        Command::Reproduce(args) => cmd_reproduce(args),
    }
}

fn family_from_args(args: &GenArgs) -> crate::Result<MatrixFamily> {
    let need_n = || {
        args.n
            .ok_or_else(|| Error::Domain(format!("family '{}' needs --n", args.family)))
    };
    Ok(match args.family.as_str() {
        "derangement" => MatrixFamily::Derangement { n: need_n()? },
        "eps-identity" | "eps_identity" => MatrixFamily::EpsIdentity {
            n: need_n()?,
            eps: args
                .eps
                .ok_or_else(|| Error::Domain("eps-identity needs --eps".into()))?,
        },
        "mc" | "m_c" => MatrixFamily::Mc {
            n: need_n()?,
            c: args.c.ok_or_else(|| Error::Domain("mc needs --c".into()))?,
        },
        "inner-product" | "inner_product" => MatrixFamily::InnerProduct { n: need_n()? },
        "disjointness" => MatrixFamily::Disjointness { n: need_n()? },
        "hexagon-slack" | "hexagon_slack" => MatrixFamily::HexagonSlack,
        "tensor-pair" | "tensor_pair" => MatrixFamily::TensorPair {
            a: args
                .a
                .ok_or_else(|| Error::Domain("tensor-pair needs --a".into()))?,
        },
        "ex4.4" => MatrixFamily::OnesRowIdentity {
            n: args.n.unwrap_or(10),
            eps: args.eps.unwrap_or(0.01),
        },
        "ex4.10" => MatrixFamily::CyclicPairIdentity {
            n: args.n.unwrap_or(10),
            eps: args.eps.unwrap_or(0.01),
        },
        "ex5.1" => {
            let n = args.n.unwrap_or(10);
            MatrixFamily::EpsIdentity {
                n: n + 1,
                eps: args.eps.unwrap_or(1.0 / n as f64),
            }
        }
        "ex5.2" => MatrixFamily::TridiagonalBlend {
            n: args.n.unwrap_or(10),
            eps: args.eps.unwrap_or(0.001),
        },
        "ex5.3" => MatrixFamily::EpsIdentity {
            n: args.n.unwrap_or(10),
            eps: args.eps.unwrap_or(0.9),
        },
        other => {
            return Err(Error::Domain(format!(
                "unknown family '{other}'; see `psdrank gen --help`"
            )))
        }
    })
}

fn cmd_gen(args: GenArgs) -> crate::Result<i32> {
    let family = family_from_args(&args)?;
    let m = generate(family)?;
    io::write_json_file(&args.out, &io::matrix_to_json(m.matrix()))?;
    println!(
        "wrote {}x{} matrix ({}) to {}",
        m.rows(),
        m.cols(),
        args.family,
        args.out.display()
    );
    Ok(0)
}

fn cmd_bounds(args: BoundsArgs) -> crate::Result<i32> {
    let matrix = io::read_nonneg_matrix_file(&args.matrix)?;
    let mut tol = ToleranceConfig::default();
    if let Some(t) = args.rank_threshold {
        tol.rank_rel_threshold = t;
    }
    tol.validate()?;
    let mut cfg = SimplexOptConfig {
        seed: default_seed(args.seed),
        step_rule: StepRule::FrankWolfe,
        ..SimplexOptConfig::default()
    };
    if let Some(r) = args.restarts {
        cfg.restarts = r;
    }
    if let Some(m) = args.max_iters {
        cfg.max_iters = m;
    }

    let (q_single, q_rows) = match &args.q_file {
        None => (None, None),
        Some(path) => match io::read_distribution_file(path)? {
            io::DistributionFile::Single(q) => (Some(q), None),
            io::DistributionFile::PerRow(rows) => (None, Some(rows)),
        },
    };

    let requested: Vec<&str> = args.bounds.split(',').map(str::trim).collect();
    let sides: Vec<(bool, NonnegativeMatrix)> = if args.also_transpose {
        let t = NonnegativeMatrix::new(matrix.matrix().transpose())?;
        vec![(false, matrix.clone()), (true, t)]
    } else {
        vec![(false, matrix.clone())]
    };

    let mut results: Vec<Value> = Vec::new();
    for name in &requested {
        let mut best: Option<(bool, BoundReport)> = None;
        for (transposed, side) in &sides {
            let report = match *name {
                "b1" => bound_b1(side, &tol)?,
                "b1r" => bound_b1_real(side, &tol)?,
                "b2" => bound_b2(side)?,
                "b3" => bound_b3(side, &cfg, q_single.as_deref())?,
                "b4" => bound_b4(side)?,
                "b5" => bound_b5(side, &cfg, q_rows.as_deref())?,
                other => {
                    return Err(Error::Domain(format!(
                        "unknown bound '{other}' (expected b1,b1r,b2,b3,b4,b5)"
                    )))
                }
            };
            if best.as_ref().is_none_or(|(_, b)| report.value > b.value) {
                best = Some((*transposed, report));
            }
        }
        let (transposed, report) = best.expect("at least one side");
        println!("{:>4} = {:.6}{}", *name, report.value, side_tag(transposed));
        results.push(bound_to_json(name, &report, transposed));

        if args.rescale {
            let inner = match *name {
                "b3" => Some(InnerBound::B3),
                "b4" => Some(InnerBound::B4),
                "b5" => Some(InnerBound::B5),
                _ => None,
            };
            if let Some(inner) = inner {
                let mut best: Option<(bool, BoundReport)> = None;
                for (transposed, side) in &sides {
                    let report = rescaled_bound(side, inner, &cfg, None)?;
                    if best.as_ref().is_none_or(|(_, b)| report.value > b.value) {
                        best = Some((*transposed, report));
                    }
                }
                let (transposed, report) = best.expect("at least one side");
                println!(
                    "{:>4}' = {:.6}{} (rescaled)",
                    *name,
                    report.value,
                    side_tag(transposed)
                );
                results.push(bound_to_json(&format!("{name}_rescaled"), &report, transposed));
            }
        }
    }

    if let Some(split) = &args.block_split {
        let (k, l) = parse_split(split)?;
        let leaf = match args.block_leaf.as_str() {
            "b1" => LeafBound::B1,
            "b2" => LeafBound::B2,
            "b3" => LeafBound::B3,
            "b4" => LeafBound::B4,
            other => {
                return Err(Error::Domain(format!(
                    "unknown leaf bound '{other}' (expected b1|b2|b3|b4)"
                )))
            }
        };
        let report = block_zero_bound(
            &matrix,
            BlockPartition {
                row_split: k,
                col_split: l,
            },
            leaf,
            &tol,
        )?;
        println!("block-zero bound at split ({k},{l}) = {:.6}", report.value);
        results.push(bound_to_json("block_zero", &report, false));
    }

    if let Some(path) = &args.report {
        let value = json!({
            "schema": REPORT_SCHEMA,
            "command": "bounds",
            "matrix": args.matrix.display().to_string(),
            "seed": cfg.seed,
            "results": results,
        });
        io::write_json_file(path, &value)?;
    }
    Ok(0)
}

fn parse_split(s: &str) -> crate::Result<(usize, usize)> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!("block-split: expected K,L, got '{s}'")));
    }
    let k = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("block-split: bad row split '{}'", parts[0])))?;
    let l = parts[1]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("block-split: bad column split '{}'", parts[1])))?;
    Ok((k, l))
}

fn side_tag(transposed: bool) -> &'static str {
    if transposed {
        " (transposed side)"
    } else {
        ""
    }
}

fn bound_to_json(name: &str, report: &BoundReport, transposed: bool) -> Value {
    let mut v = serde_json::to_value(report).unwrap_or_else(|_| json!({}));
    if let Some(obj) = v.as_object_mut() {
        obj.insert("name".into(), json!(name));
        obj.insert("transposed".into(), json!(transposed));
    }
    v
}

fn cmd_factorize(args: FactorizeArgs) -> crate::Result<i32> {
    let tol = ToleranceConfig::default();
    let need_n = || {
        args.n
            .ok_or_else(|| Error::Domain(format!("family '{}' needs --n", args.family)))
    };
    let fact: PsdFactorization = match args.family.as_str() {
        "ne" => {
            let n = need_n()?;
            if n % 2 == 1 {
                ne_factorization_odd(n)?
            } else {
                ne_factorization_even(n)?
            }
        }
        "mc" => mc_factorization(
            need_n()?,
            args.c.ok_or_else(|| Error::Domain("mc needs --c".into()))?,
        )?,
        "ip" => {
            let n = need_n()?;
            let k = args.k.unwrap_or(n.div_ceil(2));
            hadamard_root_factorization(&ip_sign_matrix(n, k)?, &tol)?
        }
        "not-full" | "not_full" => {
            let path = args
                .matrix
                .as_ref()
                .ok_or_else(|| Error::Domain("not-full needs --matrix".into()))?;
            not_full_factorization(&io::read_nonneg_matrix_file(path)?, &tol)?
        }
        "disj" => {
            let n = need_n()?;
            if n == 0 {
                return Err(Error::Domain("disj needs n >= 1".into()));
            }
            let base = crate::report::disjointness_base_factorization(&tol)?;
            let mut fact = base.clone();
            for _ in 1..n {
                fact = tensor_factorization(&fact, &base)?;
            }
            fact
        }
        other => {
            return Err(Error::Domain(format!(
                "unknown factorization family '{other}' (expected ne|mc|ip|not-full|disj)"
            )))
        }
    };
    let fact = if args.real { realify(&fact)? } else { fact };
    io::write_json_file(&args.out, &io::factorization_to_json(&fact))?;
    println!(
        "wrote size-{} {} factorization to {}",
        fact.size(),
        match fact.field() {
            crate::matrix::Field::Real => "real",
            crate::matrix::Field::Complex => "complex",
        },
        args.out.display()
    );
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> crate::Result<i32> {
    let target = io::read_nonneg_matrix_file(&args.matrix)?;
    let fact = io::read_factorization_file(&args.factorization)?;
    let mut tol = ToleranceConfig::default();
    if let Some(t) = args.tol {
        tol.verify_abs_tol = t;
    }
    tol.validate()?;
    let report = verify(&fact, &target, &tol)?;
    let ok = report.passes(&tol);
    println!(
        "max |Tr(E_i F_j) - A(i,j)| = {:.3e} (tolerance {:.1e}); factors {}",
        report.max_abs_error,
        tol.verify_abs_tol,
        if report.all_psd { "all PSD" } else { "NOT all PSD" }
    );
    if let Some(path) = &args.report {
        let value = json!({
            "schema": REPORT_SCHEMA,
            "command": "verify",
            "matrix": args.matrix.display().to_string(),
            "factorization": args.factorization.display().to_string(),
            "max_abs_error": report.max_abs_error,
            "all_psd": report.all_psd,
            "pass": ok,
        });
        io::write_json_file(path, &value)?;
    }
    Ok(if ok { 0 } else { 1 })
}

fn parse_bits(name: &str, s: &str) -> crate::Result<Vec<u8>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0u8),
            '1' => Ok(1u8),
            other => Err(Error::Parse(format!("{name}: invalid bit '{other}'"))),
        })
        .collect()
}

fn cmd_protocol_ip(args: ProtocolIpArgs) -> crate::Result<i32> {
    let x = parse_bits("x", &args.x)?;
    let y = parse_bits("y", &args.y)?;
    let mode = match args.samples {
        None => ProtocolMode::Exact,
        Some(count) => ProtocolMode::Sample {
            seed: default_seed(args.seed),
            count,
        },
    };
    let out = ip_protocol(args.n, &x, &y, mode)?;
    for ((label, p), v) in out
        .labels
        .iter()
        .zip(&out.outcome_probs)
        .zip(&out.output_values)
    {
        println!("{label:<28} p = {p:<12.6} value = {v:.6}");
    }
    println!("expectation = {}", out.expectation);
    if let Some(path) = &args.report {
        let value = json!({
            "schema": REPORT_SCHEMA,
            "command": "protocol-ip",
            "n": args.n,
            "x": args.x,
            "y": args.y,
            "outcome": serde_json::to_value(&out).map_err(|e| Error::Parse(e.to_string()))?,
        });
        io::write_json_file(path, &value)?;
    }
    Ok(0)
}

fn cmd_protocol_eval(args: ProtocolEvalArgs) -> crate::Result<i32> {
    let fact = io::read_factorization_file(&args.factorization)?;
    let values = match io::read_distribution_file(&args.values)? {
        io::DistributionFile::Single(v) => v,
        io::DistributionFile::PerRow(_) => {
            return Err(Error::Parse("values: expected a flat array".into()))
        }
    };
    let out = evaluate_protocol(&fact, args.column, &values)?;
    for ((label, p), v) in out
        .labels
        .iter()
        .zip(&out.outcome_probs)
        .zip(&out.output_values)
    {
        println!("{label:<12} p = {p:<12.6} value = {v:.6}");
    }
    println!("expectation = {}", out.expectation);
    if let Some(path) = &args.report {
        let value = json!({
            "schema": REPORT_SCHEMA,
            "command": "protocol-eval",
            "factorization": args.factorization.display().to_string(),
            "column": args.column,
            "outcome": serde_json::to_value(&out).map_err(|e| Error::Parse(e.to_string()))?,
        });
        io::write_json_file(path, &value)?;
    }
    Ok(0)
}

fn cmd_reproduce(args: ReproduceArgs) -> crate::Result<i32> {
    let ids: Vec<String> = if args.all {
        EXAMPLE_IDS.iter().map(|s| s.to_string()).collect()
    } else if let Some(id) = &args.example {
        vec![id.clone()]
    } else {
        return Err(Error::Domain(
            "reproduce needs --example <id> or --all".into(),
        ));
    };
    let seed = default_seed(args.seed);
    let mut reports = Vec::new();
    let mut all_pass = true;
    for id in &ids {
        let report = reproduce(id, seed)?;
        for row in &report.rows {
            println!(
                "[{}] {}: computed {} {} {} ... {}",
                report.example_id,
                row.quantity,
                io::format_sig(row.computed_value),
                row.relation,
                io::format_sig(row.reference_value),
                if row.pass { "pass" } else { "FAIL" }
            );
        }
        all_pass &= report.pass;
        reports.push(report);
    }
    if let Some(path) = &args.report {
        let value = json!({
            "schema": REPORT_SCHEMA,
            "command": "reproduce",
            "seed": seed,
            "reports": serde_json::to_value(&reports).map_err(|e| Error::Parse(e.to_string()))?,
            "pass": all_pass,
        });
        io::write_json_file(path, &value)?;
    }
    Ok(if all_pass { 0 } else { 1 })
}
