//! Optimization over the probability simplex for the fidelity bound (a
//! convex quadratic minimization) and the combined bound (a quasi-concave
//! ratio maximized per row by projected-gradient ascent with restarts).

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{
    b5_row_ratio, check_simplex, fidelity_gram, quadratic_form, reject_zero, BoundName,
    BoundReport, Certificate, SolverStats,
};
use crate::error::{Error, Result};
use crate::nonneg::NonnegativeMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepRule {
    FrankWolfe,
    ProjectedGradient,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SimplexOptConfig {
    pub max_iters: usize,
    pub restarts: usize,
    pub step_rule: StepRule,
    pub convergence_tol: f64,
    pub seed: u64,
}

impl Default for SimplexOptConfig {
    fn default() -> Self {
        Self {
            max_iters: 20_000,
            restarts: 16,
            step_rule: StepRule::FrankWolfe,
            convergence_tol: 1e-12,
            seed: 0,
        }
    }
}

impl SimplexOptConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_iters == 0 || self.restarts == 0 {
            return Err(Error::Domain(
                "max_iters and restarts must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Fidelity lower bound: maximize 1/(qᵀGq) over the simplex, where G is the
/// squared-fidelity Gram matrix of the normalized columns. The quadratic is
/// convex, so the optimizer converges to the global value; any feasible q
/// (including `q_override`) still certifies a valid lower bound.
pub fn bound_b3(
    a: &NonnegativeMatrix,
    cfg: &SimplexOptConfig,
    q_override: Option<&[f64]>,
) -> Result<BoundReport> {
    cfg.validate()?;
    reject_zero(a)?;
    let g = fidelity_gram(a)?;
    let n = g.len();

    if let Some(q) = q_override {
        if q.len() != n {
            return Err(Error::Dimension(format!(
                "q length {} does not match {} columns",
                q.len(),
                n
            )));
        }
        check_simplex(q)?;
        let value = 1.0 / quadratic_form(&g, q);
        return Ok(BoundReport {
            bound: BoundName::B3,
            value,
            certificate: Some(Certificate {
                q: Some(q.to_vec()),
                ..Certificate::default()
            }),
            stats: SolverStats {
                seed: cfg.seed,
                ..SolverStats::default()
            },
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut best_q = uniform(n);
    let mut best_val = quadratic_form(&g, &best_q);
    let mut total_iters = 0;
    for restart in 0..cfg.restarts {
        let start = if restart == 0 {
            uniform(n)
        } else {
            random_simplex_point(n, &mut rng)
        };
        let (q, iters) = match cfg.step_rule {
            StepRule::FrankWolfe => minimize_quadratic_frank_wolfe(&g, start, cfg),
            StepRule::ProjectedGradient => minimize_quadratic_projected(&g, start, cfg),
        };
        total_iters += iters;
        let val = quadratic_form(&g, &q);
        if val < best_val {
            best_val = val;
            best_q = q;
        }
    }

    Ok(BoundReport {
        bound: BoundName::B3,
        value: 1.0 / best_val,
        certificate: Some(Certificate {
            q: Some(best_q),
            ..Certificate::default()
        }),
        stats: SolverStats {
            iterations: total_iters,
            restarts: cfg.restarts,
            seed: cfg.seed,
        },
    })
}

/// Combined bound: for each row, maximize the certified ratio over the
/// simplex by projected-gradient ascent with restarts. The objective is only
/// quasi-concave, so the result is reported as a certified lower bound, not
/// a claimed maximum.
pub fn bound_b5(
    a: &NonnegativeMatrix,
    cfg: &SimplexOptConfig,
    q_overrides: Option<&[Vec<f64>]>,
) -> Result<BoundReport> {
    cfg.validate()?;
    reject_zero(a)?;
    let (s, _, _) = a.strip_zero_rows_cols();
    let p = s.column_normalized()?;
    let g = fidelity_gram(a)?;
    let n = g.len();

    if let Some(qs) = q_overrides {
        let value = super::eval_b5_certificates(a, qs)?;
        return Ok(BoundReport {
            bound: BoundName::B5,
            value,
            certificate: Some(Certificate {
                row_q: Some(qs.to_vec()),
                ..Certificate::default()
            }),
            stats: SolverStats {
                seed: cfg.seed,
                ..SolverStats::default()
            },
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut total = 0.0;
    let mut row_certs = Vec::with_capacity(p.rows());
    let mut total_iters = 0;
    for i in 0..p.rows() {
        let row: Vec<f64> = (0..n).map(|k| p.get(i, k)).collect();
        // Point mass on the row's largest entry is both a strong start and
        // exact for diagonal-like matrices.
        let argmax = row
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.partial_cmp(y.1).unwrap())
            .map(|(k, _)| k)
            .unwrap_or(0);
        let mut starts = vec![uniform(n), point_mass(n, argmax)];
        while starts.len() < cfg.restarts.max(2) {
            starts.push(random_simplex_point(n, &mut rng));
        }

        let mut best_q = starts[0].clone();
        let mut best = f64::NEG_INFINITY;
        for start in starts {
            let (q, iters) = ascend_ratio(&row, &g, start, cfg);
            total_iters += iters;
            let val = b5_row_ratio(&p, &g, i, &q);
            if val > best {
                best = val;
                best_q = q;
            }
        }
        total += best;
        row_certs.push(best_q);
    }

    Ok(BoundReport {
        bound: BoundName::B5,
        value: total,
        certificate: Some(Certificate {
            row_q: Some(row_certs),
            ..Certificate::default()
        }),
        stats: SolverStats {
            iterations: total_iters,
            restarts: cfg.restarts,
            seed: cfg.seed,
        },
    })
}

fn uniform(n: usize) -> Vec<f64> {
    vec![1.0 / n as f64; n]
}

fn point_mass(n: usize, k: usize) -> Vec<f64> {
    let mut q = vec![0.0; n];
    q[k] = 1.0;
    q
}

fn random_simplex_point(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    // Exponential spacings give a uniform Dirichlet(1,...,1) sample.
    let mut q: Vec<f64> = (0..n)
        .map(|_| -(1.0 - rng.random::<f64>()).ln())
        .collect();
    let s: f64 = q.iter().sum();
    for x in &mut q {
        *x /= s;
    }
    q
}

/// Euclidean projection onto the probability simplex.
fn project_simplex(v: &[f64]) -> Vec<f64> {
    let n = v.len();
    let mut sorted = v.to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut cumsum = 0.0;
    let mut theta = 0.0;
    for (k, &u) in sorted.iter().enumerate() {
        cumsum += u;
        let candidate = (cumsum - 1.0) / (k as f64 + 1.0);
        if u - candidate > 0.0 {
            theta = candidate;
        }
    }
    (0..n).map(|i| (v[i] - theta).max(0.0)).collect()
}

fn gram_times(g: &[Vec<f64>], q: &[f64]) -> Vec<f64> {
    g.iter()
        .map(|row| row.iter().zip(q).map(|(a, b)| a * b).sum())
        .collect()
}

/// min qᵀGq by Frank-Wolfe with exact line search; the linear minimization
/// oracle over the simplex is a vertex pick.
fn minimize_quadratic_frank_wolfe(
    g: &[Vec<f64>],
    mut q: Vec<f64>,
    cfg: &SimplexOptConfig,
) -> (Vec<f64>, usize) {
    let mut iters = 0;
    for _ in 0..cfg.max_iters {
        iters += 1;
        let gq = gram_times(g, &q);
        let (k, &gk) = gq
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap();
        let qgq: f64 = q.iter().zip(&gq).map(|(a, b)| a * b).sum();
        // Duality gap for the convex quadratic: f(q) − f* ≤ 2(qᵀGq − (Gq)_k).
        let gap = 2.0 * (qgq - gk);
        if gap <= cfg.convergence_tol * qgq.max(1e-300) {
            break;
        }
        // Exact step along d = e_k − q: minimize f(q + ηd).
        let dgq = gk - qgq;
        let dgd = g[k][k] - 2.0 * gk + qgq;
        let eta = if dgd <= 0.0 {
            1.0
        } else {
            (-dgq / dgd).clamp(0.0, 1.0)
        };
        if eta == 0.0 {
            break;
        }
        for (i, x) in q.iter_mut().enumerate() {
            *x += eta * (if i == k { 1.0 } else { 0.0 } - *x);
        }
    }
    (q, iters)
}

fn minimize_quadratic_projected(
    g: &[Vec<f64>],
    mut q: Vec<f64>,
    cfg: &SimplexOptConfig,
) -> (Vec<f64>, usize) {
    // Entries of G lie in [0, 1], so the largest eigenvalue is at most the
    // maximum row sum; a step of 1/L keeps the iteration stable.
    let lmax = g
        .iter()
        .map(|row| row.iter().sum::<f64>())
        .fold(1.0, f64::max);
    let step = 1.0 / (2.0 * lmax);
    let mut iters = 0;
    for _ in 0..cfg.max_iters {
        iters += 1;
        let gq = gram_times(g, &q);
        let proposal: Vec<f64> = q
            .iter()
            .zip(&gq)
            .map(|(&x, &grad)| x - step * 2.0 * grad)
            .collect();
        let next = project_simplex(&proposal);
        let moved: f64 = next
            .iter()
            .zip(&q)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        q = next;
        if moved <= cfg.convergence_tol {
            break;
        }
    }
    (q, iters)
}

/// Projected-gradient ascent on h(q) = (uᵀq)/sqrt(qᵀGq) with backtracking.
fn ascend_ratio(
    u: &[f64],
    g: &[Vec<f64>],
    mut q: Vec<f64>,
    cfg: &SimplexOptConfig,
) -> (Vec<f64>, usize) {
    let h = |q: &[f64]| -> f64 {
        let num: f64 = u.iter().zip(q).map(|(a, b)| a * b).sum();
        let t = quadratic_form(g, q);
        if t <= 0.0 {
            0.0
        } else {
            num / t.sqrt()
        }
    };
    let mut current = h(&q);
    let mut iters = 0;
    let max_iters = cfg.max_iters.min(500);
    for _ in 0..max_iters {
        iters += 1;
        let t = quadratic_form(g, &q);
        if t <= 0.0 {
            break;
        }
        let s: f64 = u.iter().zip(&q).map(|(a, b)| a * b).sum();
        let gq = gram_times(g, &q);
        let grad: Vec<f64> = u
            .iter()
            .zip(&gq)
            .map(|(&ui, &gi)| ui / t.sqrt() - s * gi / t.powf(1.5))
            .collect();
        let mut alpha = 0.5;
        let mut improved = false;
        while alpha > 1e-8 {
            let proposal: Vec<f64> = q
                .iter()
                .zip(&grad)
                .map(|(&x, &d)| x + alpha * d)
                .collect();
            let candidate = project_simplex(&proposal);
            let val = h(&candidate);
            if val > current + 1e-15 {
                q = candidate;
                current = val;
                improved = true;
                break;
            }
            alpha *= 0.5;
        }
        if !improved {
            break;
        }
    }
    (q, iters)
}
