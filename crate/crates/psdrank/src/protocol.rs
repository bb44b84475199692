//! PSD factorizations as one-way quantum protocols, and the explicit
//! inner-product protocol.
//!
//! In POVM normal form the F side consists of quantum states and the E side
//! is a measurement, so fixing a column and measuring yields that column's
//! distribution. The inner-product protocol is simulated exactly: the
//! circuit's amplitudes are signed dyadic rationals throughout, so the state
//! is tracked with integer coefficients and a power-of-two scale.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::PsdFactorization;
use crate::matrix::{Field, Matrix};

const POVM_TOL: f64 = 1e-9;
const PROB_SUM_TOL: f64 = 1e-10;

/// Distribution over measurement outcomes with the nonnegative output value
/// attached to each outcome.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProtocolOutcome {
    pub labels: Vec<String>,
    pub outcome_probs: Vec<f64>,
    pub output_values: Vec<f64>,
    pub expectation: f64,
}

impl ProtocolOutcome {
    fn new(labels: Vec<String>, probs: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROB_SUM_TOL {
            return Err(Error::Domain(format!(
                "outcome probabilities sum to {sum}, expected 1"
            )));
        }
        let expectation = probs.iter().zip(&values).map(|(p, v)| p * v).sum();
        Ok(Self {
            labels,
            outcome_probs: probs,
            output_values: values,
            expectation,
        })
    }
}

/// Runs one round of the generic protocol: the state F_j is measured with
/// the POVM {E_i}, and outcome i pays `values[i]`.
pub fn evaluate_protocol(
    fact: &PsdFactorization,
    column: usize,
    values: &[f64],
) -> Result<ProtocolOutcome> {
    let r = fact.size();
    let e_factors = fact.e_factors();
    let f_factors = fact.f_factors();
    if column >= f_factors.len() {
        return Err(Error::Dimension(format!(
            "column {column} out of range for {} states",
            f_factors.len()
        )));
    }
    if values.len() != e_factors.len() {
        return Err(Error::Dimension(format!(
            "need {} output values, got {}",
            e_factors.len(),
            values.len()
        )));
    }
    if let Some(k) = values.iter().position(|&v| v < 0.0) {
        return Err(Error::Domain(format!("output value at {k} is negative")));
    }
    let mut sum = Matrix::zeros(r, r, Field::Complex);
    for e in e_factors {
        sum = sum.add(e)?;
    }
    if sum.max_abs_diff(&Matrix::identity(r))? > POVM_TOL {
        return Err(Error::Precondition(
            "E side does not sum to the identity; normalize to POVM form first".into(),
        ));
    }
    let state = &f_factors[column];
    let trace = state.trace();
    if (trace.re - 1.0).abs() > POVM_TOL || trace.im.abs() > POVM_TOL {
        return Err(Error::Precondition(format!(
            "state {column} has trace {trace}, expected 1"
        )));
    }
    let probs: Vec<f64> = e_factors
        .iter()
        .map(|e| e.trace_product(state).map(|t| t.re.max(0.0)))
        .collect::<Result<_>>()?;
    let labels = (0..probs.len()).map(|i| format!("outcome {i}")).collect();
    ProtocolOutcome::new(labels, probs, values.to_vec())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProtocolMode {
    /// Closed-form outcome distribution.
    Exact,
    /// Empirical distribution over `count` draws.
    Sample { seed: u64, count: usize },
}

/// Hilbert-space dimension of the message state for input length n.
pub fn state_dimension(n: usize) -> usize {
    1 << (n / 2 + 1)
}

/// One-way protocol computing IP(x, y) in expectation with an
/// (n/2 + 1)-qubit message; n must be even and at most 20.
pub fn ip_protocol(n: usize, x: &[u8], y: &[u8], mode: ProtocolMode) -> Result<ProtocolOutcome> {
    let f = |data: usize, y: &[u8]| -> bool {
        let y0 = bits_to_index(&y[..y.len() / 2]);
        crate::families::inner_product_bit(data, y0) == 1
    };
    let g = |data: usize, y: &[u8]| -> bool {
        let y1 = bits_to_index(&y[y.len() / 2..]);
        crate::families::inner_product_bit(data, y1) == 1
    };
    split_xor_protocol(n, x, y, &f, &g, mode)
}

/// General form: computes W(x, y) = f(x₀, y) XOR g(x₁, y) in expectation,
/// where x splits into n/2-bit halves x₀x₁. The flag qubit comes first and
/// the data register holds the half-index.
pub fn split_xor_protocol(
    n: usize,
    x: &[u8],
    y: &[u8],
    f: &dyn Fn(usize, &[u8]) -> bool,
    g: &dyn Fn(usize, &[u8]) -> bool,
    mode: ProtocolMode,
) -> Result<ProtocolOutcome> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::Domain(format!("need even n >= 2, got {n}")));
    }
    if n > 20 {
        return Err(Error::Domain(format!(
            "state dimension 2^{} exceeds the simulator cap (n <= 20)",
            n / 2 + 1
        )));
    }
    check_bits("x", x, n)?;
    check_bits("y", y, n)?;

    let half = n / 2;
    let block = 1usize << half;
    let x0 = bits_to_index(&x[..half]);
    let x1 = bits_to_index(&x[half..]);

    // Amplitudes are integers times 2^{-scale/2}.
    let mut amp = vec![0i64; 2 * block];
    let mut scale = 1u32; // (|0,x0> + |1,x1>)/sqrt(2)
    amp[x0] = 1;
    amp[block + x1] = 1;

    // Bob's phase: |0,z> picks up (-1)^{f(z,y)}, |1,z> picks up (-1)^{g(z,y)}.
    for z in 0..block {
        if f(z, y) {
            amp[z] = -amp[z];
        }
        if g(z, y) {
            amp[block + z] = -amp[block + z];
        }
    }

    // Hadamard on the data register only: Walsh transform per flag block.
    walsh(&mut amp[..block]);
    walsh(&mut amp[block..]);
    scale += half as u32;

    // Measure the data register. Anything but 0^{half} outputs 0; on
    // 0^{half} a final Hadamard on the flag reveals f XOR g.
    let unit = 0.5f64.powi(scale as i32);
    let mut p_reject = 0.0;
    for w in 1..block {
        let a = amp[w];
        let b = amp[block + w];
        p_reject += ((a * a + b * b) as f64) * unit;
    }
    let plus = amp[0] + amp[block];
    let minus = amp[0] - amp[block];
    let unit_flag = 0.5f64.powi(scale as i32 + 1);
    let p_bit0 = ((plus * plus) as f64) * unit_flag;
    let p_bit1 = ((minus * minus) as f64) * unit_flag;

    let payout = ((1u64 << n) as f64).sqrt();
    let labels = vec![
        "data != 0 (output 0)".to_string(),
        "data = 0, bit 0 (output 0)".to_string(),
        format!("data = 0, bit 1 (output {payout})"),
    ];
    let values = vec![0.0, 0.0, payout];
    let exact = [p_reject, p_bit0, p_bit1];

    match mode {
        ProtocolMode::Exact => ProtocolOutcome::new(labels, exact.to_vec(), values),
        ProtocolMode::Sample { seed, count } => {
            if count == 0 {
                return Err(Error::Domain("sample count must be positive".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut tallies = [0usize; 3];
            for _ in 0..count {
                let u: f64 = rng.random();
                let k = if u < exact[0] {
                    0
                } else if u < exact[0] + exact[1] {
                    1
                } else {
                    2
                };
                tallies[k] += 1;
            }
            let freqs: Vec<f64> = tallies.iter().map(|&t| t as f64 / count as f64).collect();
            ProtocolOutcome::new(labels, freqs, values)
        }
    }
}

/// In-place unnormalized Walsh-Hadamard transform.
fn walsh(amp: &mut [i64]) {
    let n = amp.len();
    let mut h = 1;
    while h < n {
        let mut i = 0;
        while i < n {
            for j in i..i + h {
                let a = amp[j];
                let b = amp[j + h];
                amp[j] = a + b;
                amp[j + h] = a - b;
            }
            i += 2 * h;
        }
        h *= 2;
    }
}

fn bits_to_index(bits: &[u8]) -> usize {
    bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize)
}

fn check_bits(name: &str, bits: &[u8], n: usize) -> Result<()> {
    if bits.len() != n {
        return Err(Error::Dimension(format!(
            "{name} has {} bits, expected {n}",
            bits.len()
        )));
    }
    if bits.iter().any(|&b| b > 1) {
        return Err(Error::Domain(format!("{name} must be a 0/1 string")));
    }
    Ok(())
}
