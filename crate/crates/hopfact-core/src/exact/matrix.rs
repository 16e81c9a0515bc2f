//! Dense exact matrices over the rationals.
//!
//! Everything here is deterministic: reduced row-echelon form is the unique
//! canonical form of a row space, solvers return the particular solution with
//! all free variables set to zero, and kernel bases are emitted in free-column
//! order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::poly::Polynomial;
use super::scalar::Scalar;

/// Dense row-major matrix of `Scalar`s.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows: expected {ncols} columns"
        );
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Row vector from integer entries (test and fixture convenience).
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Scalar::from_int(n)).collect())
                .collect(),
        )
    }

    pub fn row_vector(v: Vec<Scalar>) -> Self {
        let cols = v.len();
        Matrix {
            rows: 1,
            cols,
            data: v,
        }
    }

    pub fn column_vector(v: Vec<Scalar>) -> Self {
        let rows = v.len();
        Matrix {
            rows,
            cols: 1,
            data: v,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_to_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn col_to_vec(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut m = self.clone();
        for e in &mut m.data {
            *e *= s;
        }
        m
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack: column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Place `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack: row mismatch");
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "apply: dimension mismatch");
        let mut out = vec![Scalar::zero(); self.rows];
        for i in 0..self.rows {
            let row = self.row(i);
            let mut acc = Scalar::zero();
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            out[i] = acc;
        }
        out
    }

    /// Kronecker product. Index convention: entry `((ia, ib), (ja, jb))` of
    /// `a ⊗ b` lives at row `ia * b.rows + ib`, column `ja * b.cols + jb`.
    /// Every tensor-space computation in the crate uses this layout.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let a = &self[(ia, ja)];
                if a.is_zero() {
                    continue;
                }
                for ib in 0..other.rows {
                    for jb in 0..other.cols {
                        let b = &other[(ib, jb)];
                        if b.is_zero() {
                            continue;
                        }
                        m[(ia * other.rows + ib, ja * other.cols + jb)] = a * b;
                    }
                }
            }
        }
        m
    }

    /// Reduced row-echelon form together with the rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let rank = m.rref_in_place();
        (m, rank)
    }

    /// In-place RREF; returns the rank. Zero rows end up at the bottom.
    pub fn rref_in_place(&mut self) -> usize {
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(pivot_row, src);
            let inv = self[(pivot_row, col)].inv();
            for j in col..self.cols {
                let v = &self[(pivot_row, j)] * &inv;
                self[(pivot_row, j)] = v;
            }
            for r in 0..self.rows {
                if r == pivot_row || self[(r, col)].is_zero() {
                    continue;
                }
                let factor = self[(r, col)].clone();
                for j in col..self.cols {
                    let v = &self[(r, j)] - &(&factor * &self[(pivot_row, j)]);
                    self[(r, j)] = v;
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Pivot columns of a matrix already in RREF.
    pub fn pivot_cols_of_rref(&self) -> Vec<usize> {
        let mut pivots = Vec::new();
        for i in 0..self.rows {
            if let Some(j) = (0..self.cols).find(|&j| !self[(i, j)].is_zero()) {
                pivots.push(j);
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact inverse, or `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let (red, _) = aug.rref();
        // Invertible iff the left block reduces to the identity.
        for i in 0..n {
            for j in 0..n {
                let expect_one = i == j;
                if red[(i, j)].is_one() != expect_one || (!expect_one && !red[(i, j)].is_zero()) {
                    return None;
                }
            }
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Kernel basis (right null space), one row per basis vector, emitted in
    /// free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (red, rank) = self.rref();
        let pivots = red.pivot_cols_of_rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - rank);
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red[(r, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self · x = rhs` for all columns of `rhs` at once.
    ///
    /// Returns the particular solution with every free variable set to zero,
    /// plus a kernel basis of the coefficient matrix; `None` if inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<LinearSolution> {
        assert_eq!(self.rows, rhs.rows, "solve: row count mismatch");
        let aug = self.hstack(rhs);
        let (red, _) = aug.rref();
        let n = self.cols;
        // Any pivot in the rhs block means an inconsistent row.
        let mut rank_lhs = 0;
        for i in 0..red.rows {
            let lead = (0..red.cols).find(|&j| !red[(i, j)].is_zero());
            match lead {
                Some(j) if j < n => rank_lhs += 1,
                Some(_) => return None,
                None => {}
            }
        }
        let mut particular = Matrix::zeros(n, rhs.cols);
        for i in 0..rank_lhs {
            let pivot_col = (0..n).find(|&j| !red[(i, j)].is_zero()).unwrap();
            for k in 0..rhs.cols {
                particular[(pivot_col, k)] = red[(i, n + k)].clone();
            }
        }
        // Recompute the kernel from the already-reduced left block.
        let mut left = Matrix::zeros(red.rows, n);
        for i in 0..red.rows {
            for j in 0..n {
                left[(i, j)] = red[(i, j)].clone();
            }
        }
        Some(LinearSolution {
            particular,
            kernel: left.kernel_basis(),
        })
    }

    /// Column space as a list of spanning vectors (the columns).
    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.col_to_vec(j)).collect()
    }

    /// Monic minimal polynomial over the rationals.
    ///
    /// Finds the first linear dependence among `I, m, m², …` by incremental
    /// elimination on flattened powers.
    pub fn min_poly(&self) -> Polynomial {
        assert!(self.is_square(), "min_poly of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Polynomial::one();
        }
        let mut powers: Vec<Matrix> = vec![Matrix::identity(n)];
        loop {
            let k = powers.len();
            // Try to express the next power in terms of the previous ones.
            let next = powers.last().unwrap().mul(self);
            let mut system = Matrix::zeros(n * n, k);
            for (c, p) in powers.iter().enumerate() {
                for i in 0..n {
                    for j in 0..n {
                        system[(i * n + j, c)] = p[(i, j)].clone();
                    }
                }
            }
            let mut rhs = Matrix::zeros(n * n, 1);
            for i in 0..n {
                for j in 0..n {
                    rhs[(i * n + j, 0)] = next[(i, j)].clone();
                }
            }
            if let Some(sol) = system.solve(&rhs) {
                // next = Σ c_i m^i  ⇒  minimal polynomial x^k − Σ c_i x^i.
                let mut coeffs = vec![Scalar::zero(); k + 1];
                for i in 0..k {
                    coeffs[i] = -sol.particular[(i, 0)].clone();
                }
                coeffs[k] = Scalar::one();
                return Polynomial::new(coeffs);
            }
            powers.push(next);
        }
    }

    /// Evaluate a polynomial at this matrix.
    pub fn poly_eval(&self, p: &Polynomial) -> Matrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        // Horner from the top coefficient down.
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = &acc[(i, i)] + c;
                acc[(i, i)] = v;
            }
        }
        acc
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "mul: dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let v = &out[(i, j)] + &(a * b);
                    out[(i, j)] = v;
                }
            }
        }
        out
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        Matrix::mul(self, rhs)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        out
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = &*a - b;
        }
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        let mut out = self.clone();
        for a in &mut out.data {
            *a = -a.clone();
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Result of a consistent linear solve.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    /// Particular solution with all free variables zero; one column per rhs column.
    pub particular: Matrix,
    /// Kernel basis of the coefficient matrix.
    pub kernel: Vec<Vec<Scalar>>,
}

/// Vector helpers used throughout the crate.
pub mod vecops {
    use super::Scalar;

    pub fn zero(n: usize) -> Vec<Scalar> {
        vec![Scalar::zero(); n]
    }

    pub fn basis(n: usize, i: usize) -> Vec<Scalar> {
        let mut v = zero(n);
        v[i] = Scalar::one();
        v
    }

    pub fn add_scaled(acc: &mut [Scalar], v: &[Scalar], c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (a, b) in acc.iter_mut().zip(v) {
            if !b.is_zero() {
                *a += &(b * c);
            }
        }
    }

    pub fn scale(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
        v.iter().map(|x| x * c).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (x, y) in a.iter().zip(b) {
            if !x.is_zero() && !y.is_zero() {
                acc += &(x * y);
            }
        }
        acc
    }

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(Scalar::is_zero)
    }

    /// Tensor coordinates of `a ⊗ b` under the crate-wide Kronecker layout.
    pub fn tensor(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero(a.len() * b.len());
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i * b.len() + j] = x * y;
                }
            }
        }
        out
    }
}
