//! Exact rational arithmetic: scalars, dense matrices, canonical subspaces,
//! and univariate polynomials with factorization over Q.

pub mod factor;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod subspace;

pub use factor::factor_poly;
pub use matrix::{vecops, LinearSolution, Matrix};
pub use poly::Polynomial;
pub use scalar::Scalar;
pub use subspace::Subspace;
