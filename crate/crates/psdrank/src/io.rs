//! File formats: matrix JSON/CSV, factorization JSON, and the fixed-width
//! float formatting that keeps reports byte-identical across runs.
//!
//! Matrix schema: `{"rows": R, "cols": C, "field": "real"|"complex",
//! "data": [...]}` with `data` row-major; complex entries are `[re, im]`
//! pairs, real matrices may use bare numbers. CSV (one comma-separated row
//! per line) is accepted for real matrices.

use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::factor::PsdFactorization;
use crate::matrix::{Field, Matrix};
use crate::nonneg::NonnegativeMatrix;

/// Serializes floats with 12 significant digits so identical inputs give
/// byte-identical files.
struct SigFigFormatter;

impl serde_json::ser::Formatter for SigFigFormatter {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()> {
        write!(writer, "{}", format_sig(value))
    }
}

/// 12-significant-digit scientific form, e.g. `1.73205080757e0`.
pub fn format_sig(value: f64) -> String {
    if value == 0.0 {
        return "0.0".to_string();
    }
    format!("{value:.11e}")
}

/// Stable-key-order, fixed-float JSON with a trailing newline.
pub fn to_json_bytes(value: &Value) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigFigFormatter);
    serde::Serialize::serialize(value, &mut ser)
        .map_err(|e| Error::Parse(format!("serialization failed: {e}")))?;
    out.push(b'\n');
    Ok(out)
}

pub fn write_json_file(path: &Path, value: &Value) -> Result<()> {
    std::fs::write(path, to_json_bytes(value)?)?;
    Ok(())
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    let data: Vec<Value> = match m.field() {
        Field::Real => m.entries().iter().map(|z| json!(z.re)).collect(),
        Field::Complex => m.entries().iter().map(|z| json!([z.re, z.im])).collect(),
    };
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "field": if m.field() == Field::Real { "real" } else { "complex" },
        "data": data,
    })
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("matrix: expected an object".into()))?;
    let rows = field_usize(obj, "rows")?;
    let cols = field_usize(obj, "cols")?;
    let field = match obj.get("field").and_then(Value::as_str) {
        Some("real") => Field::Real,
        Some("complex") => Field::Complex,
        Some(other) => {
            return Err(Error::Parse(format!(
                "matrix.field: expected \"real\" or \"complex\", got \"{other}\""
            )))
        }
        None => return Err(Error::Parse("matrix.field: missing".into())),
    };
    let data = obj
        .get("data")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("matrix.data: expected an array".into()))?;
    let expected = rows
        .checked_mul(cols)
        .filter(|&n| n <= 16_000_000)
        .ok_or_else(|| Error::Parse(format!("matrix: {rows}x{cols} is too large")))?;
    if data.len() != expected {
        return Err(Error::Parse(format!(
            "matrix.data: expected {expected} entries, got {}",
            data.len()
        )));
    }
    let mut m = Matrix::zeros(rows, cols, field);
    for (idx, entry) in data.iter().enumerate() {
        let z = parse_entry(entry, idx)?;
        if field == Field::Real && z.im != 0.0 {
            return Err(Error::Parse(format!(
                "matrix.data[{idx}]: nonzero imaginary part in a real matrix"
            )));
        }
        m.set(idx / cols, idx % cols, z);
    }
    Ok(m)
}

fn parse_entry(entry: &Value, idx: usize) -> Result<Complex64> {
    if let Some(x) = entry.as_f64() {
        return Ok(Complex64::new(x, 0.0));
    }
    if let Some(pair) = entry.as_array() {
        if pair.len() == 2 {
            let re = pair[0]
                .as_f64()
                .ok_or_else(|| Error::Parse(format!("matrix.data[{idx}][0]: not a number")))?;
            let im = pair[1]
                .as_f64()
                .ok_or_else(|| Error::Parse(format!("matrix.data[{idx}][1]: not a number")))?;
            return Ok(Complex64::new(re, im));
        }
    }
    Err(Error::Parse(format!(
        "matrix.data[{idx}]: expected a number or [re, im]"
    )))
}

fn field_usize(obj: &serde_json::Map<String, Value>, name: &str) -> Result<usize> {
    obj.get(name)
        .and_then(Value::as_u64)
        .map(|v| v as usize)
        .ok_or_else(|| Error::Parse(format!("matrix.{name}: missing or not an integer")))
}

/// Reads a matrix from JSON, or CSV when the extension is `.csv`.
pub fn read_matrix_file(path: &Path) -> Result<Matrix> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "csv") {
        return matrix_from_csv(&text);
    }
    let value: Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    matrix_from_json(&value)
}

pub fn read_nonneg_matrix_file(path: &Path) -> Result<NonnegativeMatrix> {
    NonnegativeMatrix::new(read_matrix_file(path)?)
}

pub fn matrix_from_csv(text: &str) -> Result<Matrix> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row: Result<Vec<f64>> = line
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Parse(format!("csv line {}: bad number '{tok}'", lineno + 1)))
            })
            .collect();
        rows.push(row?);
    }
    if rows.is_empty() {
        return Err(Error::Parse("csv: no rows".into()));
    }
    Matrix::from_rows_real(&rows)
}

pub fn factorization_to_json(fact: &PsdFactorization) -> Value {
    json!({
        "size": fact.size(),
        "field": if fact.field() == Field::Real { "real" } else { "complex" },
        "E": fact.e_factors().iter().map(matrix_to_json).collect::<Vec<_>>(),
        "F": fact.f_factors().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

pub fn factorization_from_json(v: &Value) -> Result<PsdFactorization> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("factorization: expected an object".into()))?;
    let e = obj
        .get("E")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("factorization.E: missing".into()))?;
    let f = obj
        .get("F")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("factorization.F: missing".into()))?;
    let e_factors: Result<Vec<Matrix>> = e.iter().map(matrix_from_json).collect();
    let f_factors: Result<Vec<Matrix>> = f.iter().map(matrix_from_json).collect();
    let fact = PsdFactorization::new(e_factors?, f_factors?)?;
    if let Some(size) = obj.get("size").and_then(Value::as_u64) {
        if size as usize != fact.size() {
            return Err(Error::Parse(format!(
                "factorization.size: declared {size}, factors are {}x{}",
                fact.size(),
                fact.size()
            )));
        }
    }
    Ok(fact)
}

pub fn read_factorization_file(path: &Path) -> Result<PsdFactorization> {
    let text = std::fs::read_to_string(path)?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    factorization_from_json(&value)
}

/// A distribution file: either a bare array (one distribution) or an array
/// of arrays (one distribution per row).
pub enum DistributionFile {
    Single(Vec<f64>),
    PerRow(Vec<Vec<f64>>),
}

pub fn read_distribution_file(path: &Path) -> Result<DistributionFile> {
    let text = std::fs::read_to_string(path)?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let arr = value
        .as_array()
        .ok_or_else(|| Error::Parse("distribution: expected an array".into()))?;
    if arr.is_empty() {
        return Err(Error::Parse("distribution: empty array".into()));
    }
    if arr[0].is_array() {
        let rows: Result<Vec<Vec<f64>>> = arr
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.as_array()
                    .ok_or_else(|| Error::Parse(format!("distribution[{i}]: expected an array")))?
                    .iter()
                    .map(|x| {
                        x.as_f64()
                            .ok_or_else(|| Error::Parse(format!("distribution[{i}]: not a number")))
                    })
                    .collect()
            })
            .collect();
        Ok(DistributionFile::PerRow(rows?))
    } else {
        let q: Result<Vec<f64>> = arr
            .iter()
            .enumerate()
            .map(|(i, x)| {
                x.as_f64()
                    .ok_or_else(|| Error::Parse(format!("distribution[{i}]: not a number")))
            })
            .collect();
        Ok(DistributionFile::Single(q?))
    }
}
