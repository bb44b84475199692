//! Diagonal-rescaling variants of the fidelity, row-maxima, and combined
//! bounds. Row scales of zero drop the row, mirroring the fact that removing
//! all-zero rows leaves the PSD-rank unchanged.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{
    bound_b3, bound_b5, eval_b4, reject_zero, BoundName, BoundReport, Certificate,
    SimplexOptConfig, SolverStats,
};
use crate::error::{Error, Result};
use crate::nonneg::NonnegativeMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InnerBound {
    B3,
    B4,
    B5,
}

impl InnerBound {
    fn rescaled_name(self) -> BoundName {
        match self {
            InnerBound::B3 => BoundName::B3Rescaled,
            InnerBound::B4 => BoundName::B4Rescaled,
            InnerBound::B5 => BoundName::B5Rescaled,
        }
    }
}

/// Best inner bound over visited diagonal rescalings D. With an explicit
/// `d_override` only that D is evaluated; otherwise a multiplicative
/// coordinate search with random restarts runs, always including D = I.
pub fn rescaled_bound(
    a: &NonnegativeMatrix,
    inner: InnerBound,
    cfg: &SimplexOptConfig,
    d_override: Option<&[f64]>,
) -> Result<BoundReport> {
    cfg.validate()?;
    reject_zero(a)?;

    if let Some(d) = d_override {
        let (value, inner_cert, iters) = evaluate_with_d(a, inner, cfg, d)?;
        return Ok(BoundReport {
            bound: inner.rescaled_name(),
            value,
            certificate: Some(Certificate {
                d: Some(d.to_vec()),
                ..inner_cert
            }),
            stats: SolverStats {
                iterations: iters,
                restarts: 0,
                seed: cfg.seed,
            },
        });
    }

    // Cheap config for scoring candidates during the search; the winner is
    // re-evaluated with the caller's full config at the end.
    let probe_cfg = SimplexOptConfig {
        max_iters: cfg.max_iters.min(2_000),
        restarts: 2,
        ..*cfg
    };

    let rows = a.rows();
    let identity = vec![1.0; rows];
    let mut best_d = identity.clone();
    let mut best_val = match evaluate_with_d(a, inner, &probe_cfg, &identity) {
        Ok((v, _, _)) => v,
        Err(_) => f64::NEG_INFINITY,
    };

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let factors = [0.0, 0.1, 0.5, 2.0, 10.0];
    for restart in 0..cfg.restarts {
        let mut d: Vec<f64> = if restart == 0 {
            identity.clone()
        } else {
            (0..rows)
                .map(|_| {
                    let log = rng.random::<f64>() * (1e2f64.ln() - 1e-2f64.ln()) + 1e-2f64.ln();
                    log.exp()
                })
                .collect()
        };
        let mut current = match evaluate_with_d(a, inner, &probe_cfg, &d) {
            Ok((v, _, _)) => v,
            Err(_) => continue,
        };
        for _pass in 0..2 {
            for i in 0..rows {
                let original = d[i];
                let mut local_best = current;
                let mut local_scale = original;
                for &f in &factors {
                    let candidate = if f == 0.0 { 0.0 } else { original * f };
                    d[i] = candidate;
                    if let Ok((v, _, _)) = evaluate_with_d(a, inner, &probe_cfg, &d) {
                        if v > local_best {
                            local_best = v;
                            local_scale = candidate;
                        }
                    }
                }
                d[i] = local_scale;
                current = local_best;
            }
        }
        if current > best_val {
            best_val = current;
            best_d = d;
        }
    }

    // Final evaluation at full strength; the identity guards monotonicity
    // against the probe config being weaker than the caller's.
    let (id_val, id_cert, id_iters) = evaluate_with_d(a, inner, cfg, &identity)?;
    let (val, cert, iters) = evaluate_with_d(a, inner, cfg, &best_d)?;
    let (value, d, inner_cert, iters) = if id_val > val {
        (id_val, identity, id_cert, id_iters)
    } else {
        (val, best_d, cert, iters)
    };

    Ok(BoundReport {
        bound: inner.rescaled_name(),
        value,
        certificate: Some(Certificate {
            d: Some(d),
            ..inner_cert
        }),
        stats: SolverStats {
            iterations: iters,
            restarts: cfg.restarts,
            seed: cfg.seed,
        },
    })
}

fn evaluate_with_d(
    a: &NonnegativeMatrix,
    inner: InnerBound,
    cfg: &SimplexOptConfig,
    d: &[f64],
) -> Result<(f64, Certificate, usize)> {
    let scaled = a.row_scaled(d)?;
    if scaled.is_zero() {
        return Err(Error::Domain(
            "rescaling zeroes the whole matrix".into(),
        ));
    }
    match inner {
        InnerBound::B3 => {
            let rep = bound_b3(&scaled, cfg, None)?;
            Ok((
                rep.value,
                rep.certificate.unwrap_or_default(),
                rep.stats.iterations,
            ))
        }
        InnerBound::B4 => Ok((eval_b4(&scaled)?, Certificate::default(), 0)),
        InnerBound::B5 => {
            let rep = bound_b5(&scaled, cfg, None)?;
            Ok((
                rep.value,
                rep.certificate.unwrap_or_default(),
                rep.stats.iterations,
            ))
        }
    }
}

/// Re-evaluates a rescaled-bound certificate: applies D, then the stored
/// distributions.
pub fn eval_rescaled_certificate(
    a: &NonnegativeMatrix,
    inner: InnerBound,
    cert: &Certificate,
) -> Result<f64> {
    let d = cert
        .d
        .as_ref()
        .ok_or_else(|| Error::Domain("certificate lacks a diagonal".into()))?;
    let scaled = a.row_scaled(d)?;
    if scaled.is_zero() {
        return Err(Error::Domain("rescaling zeroes the whole matrix".into()));
    }
    match inner {
        InnerBound::B3 => {
            let q = cert
                .q
                .as_ref()
                .ok_or_else(|| Error::Domain("certificate lacks q".into()))?;
            super::eval_b3_certificate(&scaled, q)
        }
        InnerBound::B4 => eval_b4(&scaled),
        InnerBound::B5 => {
            let qs = cert
                .row_q
                .as_ref()
                .ok_or_else(|| Error::Domain("certificate lacks row_q".into()))?;
            super::eval_b5_certificates(&scaled, qs)
        }
    }
}
