//! Subspaces of a fixed coordinate space in canonical RREF form.
//!
//! Two subspaces are equal as sets exactly when their RREF bases are equal
//! entry-wise, so `PartialEq` on `Subspace` is set equality.

use std::ops::Neg;

use serde::{Deserialize, Serialize};

use super::matrix::{vecops, Matrix};
use super::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Subspace {
    ambient: usize,
    /// RREF basis, one row per basis vector; no zero rows.
    basis: Matrix,
}

impl Subspace {
    /// Span of the rows of `m` inside an ambient space of dimension `m.cols()`.
    pub fn from_span(m: &Matrix) -> Self {
        let (red, rank) = m.rref();
        let mut rows = Vec::with_capacity(rank);
        for i in 0..rank {
            rows.push(red.row_to_vec(i));
        }
        Subspace {
            ambient: m.cols(),
            basis: if rank == 0 {
                Matrix::zeros(0, m.cols())
            } else {
                Matrix::from_rows(rows)
            },
        }
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        assert!(vectors.iter().all(|v| v.len() == ambient));
        Subspace::from_span(&Matrix::from_rows(vectors.to_vec()))
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of a single coordinate vector.
    pub fn line(v: &[Scalar]) -> Self {
        Subspace::from_vectors(v.len(), &[v.to_vec()])
    }

    /// Span from integer rows (test and fixture convenience).
    pub fn from_int_span(rows: &[&[i64]]) -> Self {
        Subspace::from_span(&Matrix::from_int_rows(rows))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical RREF basis.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row_to_vec(i)).collect()
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.basis.pivot_cols_of_rref()
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        (0..other.dim()).all(|i| self.contains_vec(other.basis.row(i)))
    }

    /// Residual of `v` after eliminating the pivot coordinates; zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivot_cols().iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let c = -out[p].clone();
            vecops::add_scaled(&mut out, self.basis.row(r), &c);
        }
        out
    }

    /// Coordinates of `v` in the RREF basis; `None` if `v` is outside.
    ///
    /// Because rows are RREF, the coordinate along row `r` is just the entry
    /// of `v` at that row's pivot column.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(
            self.pivot_cols()
                .iter()
                .map(|&p| v[p].clone())
                .collect(),
        )
    }

    /// Map coordinates in this subspace's basis back to ambient coordinates.
    pub fn embed(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vecops::zero(self.ambient);
        for (r, c) in coords.iter().enumerate() {
            vecops::add_scaled(&mut out, self.basis.row(r), c);
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        Subspace::from_span(&self.basis.vstack(&other.basis))
    }

    /// Exact intersection via the kernel of the stacked system
    /// `x·A − y·B = 0`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // Columns: coefficients on self's basis then other's basis.
        let stacked = self
            .basis
            .transpose()
            .hstack(&(&other.basis.transpose()).neg());
        let kernel = stacked.kernel_basis();
        let mut vectors = Vec::with_capacity(kernel.len());
        for k in kernel {
            let coeffs = &k[..self.dim()];
            let mut v = vecops::zero(self.ambient);
            for (r, c) in coeffs.iter().enumerate() {
                vecops::add_scaled(&mut v, self.basis.row(r), c);
            }
            vectors.push(v);
        }
        Subspace::from_vectors(self.ambient, &vectors)
    }
}

impl std::fmt::Display for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of {})", self.dim(), self.ambient)
    }
}
