//! Phase balancing: unit phases that cancel a nonnegative vector with no
//! dominant entry. The vector is split into three groups whose sums close a
//! triangle; the triangle's corner angles give each group's common phase.

use num_complex::Complex64;

use crate::error::{Error, Result};

const RESIDUAL_TOL: f64 = 1e-10;

/// Angles (radians, one per entry) with Σ v_j·e^{iθ_j} = 0 for the source
/// vector.
#[derive(Debug, Clone)]
pub struct PhaseAssignment {
    pub thetas: Vec<f64>,
}

impl PhaseAssignment {
    /// |Σ v_j e^{iθ_j}| for a candidate vector.
    pub fn residual(&self, v: &[f64]) -> f64 {
        v.iter()
            .zip(&self.thetas)
            .map(|(&x, &t)| Complex64::from_polar(x, t))
            .sum::<Complex64>()
            .norm()
    }
}

/// Computes balancing phases for a nonnegative vector whose largest entry is
/// at most the sum of the others. Errors name the dominant index otherwise.
pub fn phase_balance(v: &[f64]) -> Result<PhaseAssignment> {
    if v.is_empty() {
        return Err(Error::Dimension("cannot balance an empty vector".into()));
    }
    if let Some(k) = v.iter().position(|&x| x < 0.0) {
        return Err(Error::Domain(format!(
            "entry {} at index {k} is negative",
            v[k]
        )));
    }
    let total: f64 = v.iter().sum();
    if total == 0.0 {
        return Ok(PhaseAssignment {
            thetas: vec![0.0; v.len()],
        });
    }
    let (argmax, &max) = v
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .unwrap();
    let rest: f64 = v
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != argmax)
        .map(|(_, &x)| x)
        .sum();
    if max > rest {
        return Err(Error::Precondition(format!(
            "entry {max} at index {argmax} is dominant (rest sum to {rest})"
        )));
    }

    // Sort descending, remembering where each entry came from.
    let mut order: Vec<usize> = (0..v.len()).collect();
    order.sort_by(|&i, &j| v[j].partial_cmp(&v[i]).unwrap());
    let sorted: Vec<f64> = order.iter().map(|&i| v[i]).collect();
    let m = sorted.len();
    let a = sorted[0];

    // First split where (a, Σ_{2..=k}, Σ_{k+1..}) close a triangle. The
    // no-dominance hypothesis guarantees one exists in exact arithmetic; a
    // few ulps of slack absorb summation-order rounding at boundary inputs,
    // and the residual check below still enforces the outcome.
    let slack = 64.0 * f64::EPSILON * total;
    let mut split = None;
    let mut b = 0.0;
    let mut c: f64 = sorted[1..].iter().sum();
    for k in 1..=m {
        if k > 1 {
            b += sorted[k - 1];
            c -= sorted[k - 1];
        }
        if a <= b + c + slack && b <= a + c + slack && c <= a + b + slack {
            split = Some((k, b, c.max(0.0)));
            break;
        }
    }
    let (k, b, c) = split.ok_or_else(|| {
        Error::Domain("no triangle split found; vector is numerically degenerate".into())
    })?;

    // Head-to-tail angles of the triangle edges with lengths a, b, c.
    let (theta_b, theta_c) = if b == 0.0 {
        (std::f64::consts::PI, std::f64::consts::PI)
    } else if c == 0.0 {
        (std::f64::consts::PI, 0.0)
    } else {
        let cos_ab = ((a * a + b * b - c * c) / (2.0 * a * b)).clamp(-1.0, 1.0);
        let cos_bc = ((b * b + c * c - a * a) / (2.0 * b * c)).clamp(-1.0, 1.0);
        let tb = std::f64::consts::PI - cos_ab.acos();
        (tb, tb + std::f64::consts::PI - cos_bc.acos())
    };

    let mut thetas = vec![0.0; m];
    for (pos, &orig) in order.iter().enumerate() {
        thetas[orig] = if pos == 0 {
            0.0
        } else if pos < k {
            theta_b
        } else {
            theta_c
        };
    }

    let assignment = PhaseAssignment { thetas };
    let res = assignment.residual(v);
    if res >= RESIDUAL_TOL {
        return Err(Error::Domain(format!(
            "phase balancing residual {res:.3e} exceeds {RESIDUAL_TOL:.0e}"
        )));
    }
    Ok(assignment)
}
