//! Size-n PSD factorizations of large derangement matrices, built from
//! Hermitian unitaries supported on the symbol classes of a symmetric Latin
//! square and filled with Vandermonde rows.
//!
//! Odd n: the addition table of Z_n gives n² matrices G with Tr(G G'†) =
//! n·δ and equal traces; X = (I+G)/√n against Y = (I−G)/√n realizes
//! J − I of size n².
//!
//! Even n: a zero-diagonal symmetric Latin square gives the off-diagonal
//! classes; the diagonal class is filled with the non-constant rows of a
//! Hadamard matrix, every matrix is traceless, and n²−1 matrices realize
//! J − I of size n²−1.

use num_complex::Complex64;

use super::PsdFactorization;
use crate::error::{Error, Result};
use crate::matrix::{Field, Matrix};

fn vandermonde_entry(n: usize, j: usize, t: usize) -> Complex64 {
    let angle = -2.0 * std::f64::consts::PI * (j as f64) * (t as f64) / (n as f64);
    Complex64::from_polar(1.0, angle)
}

/// Cells above the diagonal carrying Latin symbol `symbol`, in lexicographic
/// order.
fn symbol_pairs(latin: &[Vec<usize>], symbol: usize) -> Vec<(usize, usize)> {
    let n = latin.len();
    let mut pairs = Vec::new();
    for k in 0..n {
        for l in (k + 1)..n {
            if latin[k][l] == symbol {
                pairs.push((k, l));
            }
        }
    }
    pairs
}

fn factors_from_g(gs: &[Matrix], n_scale: f64) -> Result<PsdFactorization> {
    let dim = gs[0].rows();
    let id = Matrix::identity(dim);
    let scale = 1.0 / n_scale.sqrt();
    let e: Result<Vec<Matrix>> = gs.iter().map(|g| Ok(id.add(g)?.scale(scale))).collect();
    let f: Result<Vec<Matrix>> = gs.iter().map(|g| Ok(id.sub(g)?.scale(scale))).collect();
    PsdFactorization::new(e?, f?)
}

/// Factorization of J − I on n² indices with factors of size n, odd n.
pub fn ne_factorization_odd(n: usize) -> Result<PsdFactorization> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::Domain(format!(
            "odd construction needs odd n >= 1, got {n}"
        )));
    }
    // Addition table of Z_n: a symmetric Latin square whose diagonal holds
    // each symbol exactly once.
    let latin: Vec<Vec<usize>> = (0..n).map(|k| (0..n).map(|l| (k + l) % n).collect()).collect();
    let half = n.div_ceil(2); // inverse of 2 in Z_n

    let mut gs = Vec::with_capacity(n * n);
    for i in 0..n {
        let diag_cell = (i * half) % n; // unique k with 2k = i (mod n)
        let pairs = symbol_pairs(&latin, i);
        debug_assert_eq!(pairs.len(), n / 2);
        for j in 0..n {
            let mut g = Matrix::zeros(n, n, Field::Complex);
            g.set(diag_cell, diag_cell, vandermonde_entry(n, j, 0));
            for (t, &(k, l)) in pairs.iter().enumerate() {
                g.set(k, l, vandermonde_entry(n, j, t + 1));
                g.set(l, k, vandermonde_entry(n, j, n - (t + 1)));
            }
            gs.push(g);
        }
    }
    factors_from_g(&gs, n as f64)
}

/// Factorization of J − I on n²−1 indices with factors of size n, even n.
///
/// The diagonal symbol class needs n−1 mutually orthogonal traceless ±1
/// vectors, i.e. the non-constant rows of an n×n Hadamard matrix; those
/// exist for n = 2 and the multiples of 4 covered by `hadamard_matrix`.
pub fn ne_factorization_even(n: usize) -> Result<PsdFactorization> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::Domain(format!(
            "even construction needs even n >= 2, got {n}"
        )));
    }
    let hadamard = hadamard_matrix(n)?;
    let latin = round_robin_latin_square(n);

    let mut gs = Vec::with_capacity(n * n - 1);
    // Diagonal class: traceless sign matrices.
    for j in 1..n {
        let mut g = Matrix::zeros(n, n, Field::Complex);
        for t in 0..n {
            g.set(t, t, Complex64::new(hadamard[j][t], 0.0));
        }
        gs.push(g);
    }
    // Off-diagonal classes: n/2 conjugate cell pairs each. The first
    // n/2 − 1 pairs carry (V(j,t), V(j,n−t)); the final pair carries
    // (V(j,0), V(j,n/2)) = (1, ±1), replaced by (i, −i) when j is odd so
    // the cells stay conjugate.
    for symbol in 1..n {
        let pairs = symbol_pairs(&latin, symbol);
        debug_assert_eq!(pairs.len(), n / 2);
        for j in 0..n {
            let mut g = Matrix::zeros(n, n, Field::Complex);
            for (t, &(k, l)) in pairs.iter().enumerate() {
                let (above, below) = if t + 1 < n / 2 {
                    (
                        vandermonde_entry(n, j, t + 1),
                        vandermonde_entry(n, j, n - (t + 1)),
                    )
                } else if j % 2 == 1 {
                    (Complex64::I, -Complex64::I)
                } else {
                    (vandermonde_entry(n, j, 0), vandermonde_entry(n, j, n / 2))
                };
                g.set(k, l, above);
                g.set(l, k, below);
            }
            gs.push(g);
        }
    }
    debug_assert_eq!(gs.len(), n * n - 1);
    factors_from_g(&gs, n as f64)
}

/// Symmetric Latin square on symbols {0, ..., n−1} with an all-zero
/// diagonal, from the round-robin (circle method) pairing; n even.
pub(crate) fn round_robin_latin_square(n: usize) -> Vec<Vec<usize>> {
    let m = n - 1; // odd
    let inv2 = m.div_ceil(2); // inverse of 2 mod m
    let mut latin = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                latin[i][j] = 0;
            } else if i == m || j == m {
                let other = if i == m { j } else { i };
                latin[i][j] = 1 + other;
            } else {
                latin[i][j] = 1 + (((i + j) * inv2) % m);
            }
        }
    }
    latin
}

/// ±1 matrix with orthogonal rows, first row all ones. Sylvester doubling
/// covers powers of two; the Paley construction covers n = q+1 for primes
/// q = 3 (mod 4); doubling a Paley matrix fills in sizes like 24.
pub(crate) fn hadamard_matrix(n: usize) -> Result<Vec<Vec<f64>>> {
    if n == 1 {
        return Ok(vec![vec![1.0]]);
    }
    if n == 2 {
        return Ok(vec![vec![1.0, 1.0], vec![1.0, -1.0]]);
    }
    if n % 4 != 0 {
        return Err(Error::Domain(format!(
            "no Hadamard matrix of order {n}; the even construction needs n = 2 or 4 | n"
        )));
    }
    if n > 4 && (n - 1) > 2 && is_prime(n - 1) && (n - 1) % 4 == 3 {
        return Ok(paley_hadamard(n - 1));
    }
    if n % 2 == 0 {
        if let Ok(half) = hadamard_matrix(n / 2) {
            let mut h = vec![vec![0.0; n]; n];
            for i in 0..n / 2 {
                for j in 0..n / 2 {
                    let v = half[i][j];
                    h[i][j] = v;
                    h[i][j + n / 2] = v;
                    h[i + n / 2][j] = v;
                    h[i + n / 2][j + n / 2] = -v;
                }
            }
            return Ok(h);
        }
    }
    Err(Error::Domain(format!(
        "no Hadamard construction available for order {n}"
    )))
}

/// Paley type-I Hadamard matrix of order q+1 for a prime q = 3 (mod 4).
fn paley_hadamard(q: usize) -> Vec<Vec<f64>> {
    let n = q + 1;
    let mut residue = vec![false; q];
    for x in 1..q {
        residue[(x * x) % q] = true;
    }
    let chi = |d: usize| -> f64 {
        if d == 0 {
            0.0
        } else if residue[d] {
            1.0
        } else {
            -1.0
        }
    };
    // H = I + S for the skew matrix S = [[0, 1ᵀ], [−1, Q]] with Q the
    // quadratic-character circulant; q = 3 (mod 4) makes S skew and H
    // Hadamard.
    let mut h = vec![vec![1.0; n]; n];
    for i in 0..q {
        h[i + 1][0] = -1.0;
        for j in 0..q {
            let d = (i + q - j) % q;
            h[i + 1][j + 1] = if i == j { 1.0 } else { chi(d) };
        }
    }
    h
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
