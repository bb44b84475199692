//! Lower bounds, explicit factorizations, and protocol simulations for the
//! positive semidefinite rank of nonnegative matrices.
//!
//! A PSD factorization of size r writes a nonnegative matrix as
//! A(i,j) = Tr(E_i F_j) with r×r PSD factors; the PSD-rank is the smallest
//! such r. This crate computes certificate-backed lower bounds (rank- and
//! entropy-based, fidelity, row maxima, their rescaled variants, and a
//! recursive zero-block bound), constructs explicit factorizations for the
//! nonequality, approximate-identity, inner-product, and disjointness
//! families, verifies factorizations numerically, and interprets them as
//! one-way quantum protocols.
//!
//! Start with the runnable examples (`cargo run --example bounds_tour`) or
//! the `psdrank` binary, which exposes the same functionality as
//! subcommands.

pub mod bounds;
pub mod density;
pub mod eigen;
pub mod error;
pub mod factor;
pub mod families;
pub mod fidelity;
pub mod io;
pub mod matrix;
pub mod nonneg;
pub mod protocol;
pub mod report;
pub mod spectral;
pub mod svd;
pub mod tol;

pub mod cli;

pub use error::{Error, Result};
pub use matrix::{hadamard_product, kronecker, Field, Matrix};
pub use nonneg::{NonnegativeMatrix, StochasticMatrix};
pub use tol::ToleranceConfig;
