//! End-to-end checks of the command-line surface: exit codes, file formats,
//! and byte-identical reports for identical argv + seed.

use std::path::PathBuf;

use psdrank::cli::run;

struct TempDir {
    path: PathBuf,
}

impl TempDir {
    fn new(name: &str) -> Self {
        let path = std::env::temp_dir().join(format!(
            "psdrank_cli_{}_{}",
            std::process::id(),
            name
        ));
        std::fs::create_dir_all(&path).unwrap();
        Self { path }
    }

    fn file(&self, name: &str) -> PathBuf {
        self.path.join(name)
    }
}

impl Drop for TempDir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.path);
    }
}

fn s(path: &std::path::Path) -> String {
    path.display().to_string()
}

#[test]
fn gen_then_bounds_report_is_byte_identical() {
    let dir = TempDir::new("gen_bounds");
    let matrix = dir.file("hexagon.json");
    assert_eq!(
        run(["psdrank", "gen", "--family", "hexagon-slack", "--out", &s(&matrix)]),
        0
    );

    let report1 = dir.file("report1.json");
    let report2 = dir.file("report2.json");
    for report in [&report1, &report2] {
        assert_eq!(
            run([
                "psdrank",
                "bounds",
                "--matrix",
                &s(&matrix),
                "--bounds",
                "b1,b2,b3,b4",
                "--seed",
                "42",
                "--report",
                &s(report),
            ]),
            0
        );
    }
    let a = std::fs::read(&report1).unwrap();
    let b = std::fs::read(&report2).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "reports must be byte-identical for identical argv");

    let text = String::from_utf8(a).unwrap();
    assert!(text.contains("\"schema\":1"));
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["results"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_split_exit_codes() {
    let dir = TempDir::new("verify");
    let matrix = dir.file("mc.json");
    let fact = dir.file("fact.json");
    assert_eq!(
        run([
            "psdrank", "gen", "--family", "mc", "--n", "6", "--c", "3", "--out", &s(&matrix)
        ]),
        0
    );
    assert_eq!(
        run([
            "psdrank", "factorize", "--family", "mc", "--n", "6", "--c", "3", "--out", &s(&fact)
        ]),
        0
    );
    assert_eq!(
        run([
            "psdrank",
            "verify",
            "--matrix",
            &s(&matrix),
            "--factorization",
            &s(&fact),
        ]),
        0
    );

    // A perturbation beyond tolerance must flip the exit code to 1.
    let mut value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&fact).unwrap()).unwrap();
    let entry = &mut value["E"][0]["data"][0];
    *entry = serde_json::json!(entry.as_f64().unwrap() + 1e-3);
    std::fs::write(&fact, serde_json::to_string(&value).unwrap()).unwrap();
    assert_eq!(
        run([
            "psdrank",
            "verify",
            "--matrix",
            &s(&matrix),
            "--factorization",
            &s(&fact),
        ]),
        1
    );
}

#[test]
fn malformed_files_exit_2() {
    let dir = TempDir::new("malformed");
    let bad = dir.file("bad.json");
    std::fs::write(&bad, "{\"rows\": 2, \"cols\": 2, \"field\": \"real\"}").unwrap();
    assert_eq!(
        run(["psdrank", "bounds", "--matrix", &s(&bad), "--bounds", "b1"]),
        2
    );

    let missing = dir.file("does_not_exist.json");
    assert_eq!(
        run(["psdrank", "bounds", "--matrix", &s(&missing), "--bounds", "b1"]),
        2
    );
}

#[test]
fn csv_matrices_are_accepted() {
    let dir = TempDir::new("csv");
    let csv = dir.file("matrix.csv");
    std::fs::write(&csv, "1,0.5\n0.5,1\n").unwrap();
    assert_eq!(
        run(["psdrank", "bounds", "--matrix", &s(&csv), "--bounds", "b1,b4"]),
        0
    );
}

#[test]
fn q_file_override_and_transpose() {
    let dir = TempDir::new("qfile");
    let matrix = dir.file("ones_row.json");
    assert_eq!(
        run(["psdrank", "gen", "--family", "ex4.4", "--out", &s(&matrix)]),
        0
    );
    let qfile = dir.file("q.json");
    std::fs::write(&qfile, "[0.1,0.1,0.1,0.1,0.1,0.1,0.1,0.1,0.1,0.1]").unwrap();
    assert_eq!(
        run([
            "psdrank",
            "bounds",
            "--matrix",
            &s(&matrix),
            "--bounds",
            "b3",
            "--q-file",
            &s(&qfile),
            "--also-transpose",
        ]),
        0
    );
}

#[test]
fn block_split_flag_computes_additive_bound() {
    let dir = TempDir::new("block");
    let matrix = dir.file("disj.json");
    assert_eq!(
        run([
            "psdrank",
            "gen",
            "--family",
            "disjointness",
            "--n",
            "3",
            "--out",
            &s(&matrix)
        ]),
        0
    );
    let report = dir.file("report.json");
    assert_eq!(
        run([
            "psdrank",
            "bounds",
            "--matrix",
            &s(&matrix),
            "--bounds",
            "b1",
            "--block-split",
            "4,4",
            "--report",
            &s(&report),
        ]),
        0
    );
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let results = value["results"].as_array().unwrap();
    let block = results
        .iter()
        .find(|r| r["name"] == "block_zero")
        .expect("block bound present");
    assert!(block["value"].as_f64().unwrap() >= 8.0 - 1e-9);
}

#[test]
fn protocol_ip_runs_exact_and_sampled() {
    assert_eq!(
        run([
            "psdrank", "protocol", "ip", "--n", "4", "--x", "1010", "--y", "0110"
        ]),
        0
    );
    assert_eq!(
        run([
            "psdrank", "protocol", "ip", "--n", "4", "--x", "1010", "--y", "0110", "--samples",
            "1000", "--seed", "3"
        ]),
        0
    );
    // Bad bit string is a usage-class error.
    assert_eq!(
        run(["psdrank", "protocol", "ip", "--n", "4", "--x", "10a0", "--y", "0110"]),
        2
    );
}

#[test]
fn protocol_eval_on_normalized_factorization() {
    let dir = TempDir::new("proto_eval");
    // The diagonal identity factorization is already in POVM normal form.
    let n = 3;
    let units: Vec<psdrank::matrix::Matrix> = (0..n)
        .map(|i| {
            psdrank::matrix::Matrix::from_fn_real(n, n, |a, b| {
                if a == i && b == i {
                    1.0
                } else {
                    0.0
                }
            })
        })
        .collect();
    let fact = psdrank::factor::PsdFactorization::new(units.clone(), units).unwrap();
    let fact_path = dir.file("fact.json");
    psdrank::io::write_json_file(&fact_path, &psdrank::io::factorization_to_json(&fact)).unwrap();
    let values = dir.file("values.json");
    std::fs::write(&values, "[1.0, 2.0, 3.0]").unwrap();
    assert_eq!(
        run([
            "psdrank",
            "protocol",
            "eval",
            "--factorization",
            &s(&fact_path),
            "--column",
            "1",
            "--values",
            &s(&values),
        ]),
        0
    );
}

#[test]
fn reproduce_single_and_all() {
    let dir = TempDir::new("reproduce");
    let report = dir.file("repro.json");
    assert_eq!(
        run([
            "psdrank",
            "reproduce",
            "--example",
            "ex4.4",
            "--report",
            &s(&report),
        ]),
        0
    );
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(value["pass"], serde_json::json!(true));
    assert_eq!(run(["psdrank", "reproduce", "--example", "ex9.9"]), 2);
}

#[test]
fn unknown_family_exits_2() {
    let dir = TempDir::new("unknown");
    let out = dir.file("m.json");
    assert_eq!(
        run(["psdrank", "gen", "--family", "octagon", "--out", &s(&out)]),
        2
    );
}

#[test]
fn factorize_not_full_from_matrix_file() {
    let dir = TempDir::new("notfull");
    let matrix = dir.file("tensor.json");
    assert_eq!(
        run([
            "psdrank",
            "gen",
            "--family",
            "tensor-pair",
            "--a",
            "0.5",
            "--out",
            &s(&matrix)
        ]),
        0
    );
    let fact = dir.file("fact.json");
    assert_eq!(
        run([
            "psdrank",
            "factorize",
            "--family",
            "not-full",
            "--matrix",
            &s(&matrix),
            "--out",
            &s(&fact),
        ]),
        0
    );
    assert_eq!(
        run([
            "psdrank",
            "verify",
            "--matrix",
            &s(&matrix),
            "--factorization",
            &s(&fact),
        ]),
        0
    );
    // Dominant-entry inputs are precondition failures, not usage errors.
    let bad_matrix = dir.file("bad.json");
    assert_eq!(
        run([
            "psdrank",
            "gen",
            "--family",
            "tensor-pair",
            "--a",
            "0.1",
            "--out",
            &s(&bad_matrix)
        ]),
        0
    );
    assert_eq!(
        run([
            "psdrank",
            "factorize",
            "--family",
            "not-full",
            "--matrix",
            &s(&bad_matrix),
            "--out",
            &s(&fact),
        ]),
        1
    );
}

#[test]
fn factorize_ne_and_realify_flag() {
    let dir = TempDir::new("ne_real");
    let matrix = dir.file("derangement9.json");
    assert_eq!(
        run([
            "psdrank",
            "gen",
            "--family",
            "derangement",
            "--n",
            "9",
            "--out",
            &s(&matrix)
        ]),
        0
    );
    let fact = dir.file("ne.json");
    assert_eq!(
        run([
            "psdrank", "factorize", "--family", "ne", "--n", "3", "--real", "--out", &s(&fact)
        ]),
        0
    );
    assert_eq!(
        run([
            "psdrank",
            "verify",
            "--matrix",
            &s(&matrix),
            "--factorization",
            &s(&fact),
        ]),
        0
    );
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&fact).unwrap()).unwrap();
    assert_eq!(value["field"], serde_json::json!("real"));
    assert_eq!(value["size"], serde_json::json!(6));
}

#[test]
fn env_var_seed_is_honored() {
    let dir = TempDir::new("env_seed");
    let matrix = dir.file("m.json");
    assert_eq!(
        run([
            "psdrank", "gen", "--family", "ex5.3", "--out", &s(&matrix)
        ]),
        0
    );
    let r1 = dir.file("r1.json");
    let r2 = dir.file("r2.json");
    std::env::set_var("PSDRANK_SEED", "1234");
    for r in [&r1, &r2] {
        assert_eq!(
            run([
                "psdrank", "bounds", "--matrix", &s(&matrix), "--bounds", "b5", "--report", &s(r)
            ]),
            0
        );
    }
    std::env::remove_var("PSDRANK_SEED");
    let a = std::fs::read_to_string(&r1).unwrap();
    assert_eq!(a, std::fs::read_to_string(&r2).unwrap());
    assert!(a.contains("\"seed\":1234"));
}
