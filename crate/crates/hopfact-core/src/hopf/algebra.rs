//! Finite-dimensional Hopf algebras presented by exact structure constants.
//!
//! A `HopfAlgebra` stores the multiplication tensor, unit, comultiplication
//! tensor, counit and antipode of an algebra with a distinguished basis
//! `e_0, …, e_{n-1}` over the rationals. Nothing is assumed about the input:
//! `verify_axioms` checks every axiom exhaustively over basis tuples and
//! reports the first counterexample per axiom.

use std::collections::BTreeMap;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{vecops, Matrix, Scalar, Subspace};
use crate::report::{Check, Report};

/// Sparse coordinate vector: sorted `(index, coefficient)` pairs, no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Sparse tensor-square entry list: sorted `(left, right, coefficient)`.
pub type SparseTensor = Vec<(usize, usize, Scalar)>;

/// An element of a Hopf algebra, as coordinates in the distinguished basis.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Element(pub Vec<Scalar>);

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element(vecops::zero(dim))
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        Element(vecops::basis(dim, i))
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }
}

impl Deref for Element {
    type Target = [Scalar];
    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}

impl From<Vec<Scalar>> for Element {
    fn from(v: Vec<Scalar>) -> Self {
        Element(v)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HopfAlgebra {
    dim: usize,
    /// `mult[i * dim + j]` = coordinates of `e_i · e_j`.
    mult: Vec<SparseVec>,
    unit: Vec<Scalar>,
    /// `comult[i]` = entries `(j, k, c)` of `Δe_i = Σ c · e_j ⊗ e_k`.
    comult: Vec<SparseTensor>,
    counit: Vec<Scalar>,
    /// Column `i` = coordinates of `S(e_i)`.
    antipode: Matrix,
}

impl HopfAlgebra {
    /// Assemble from coordinate lists; entries with equal indices are summed,
    /// zeros dropped, everything kept in canonical sorted order.
    pub fn from_tensors(
        dim: usize,
        mult_entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: Vec<Scalar>,
        comult_entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<Self> {
        if unit.len() != dim || counit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "unit/counit must have length {dim}"
            )));
        }
        if antipode.rows() != dim || antipode.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "antipode must be {dim}x{dim}"
            )));
        }
        let mut mult: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); dim * dim];
        for (i, j, k, c) in mult_entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidInput(format!(
                    "mult index ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            *mult[i * dim + j].entry(k).or_insert_with(Scalar::zero) += c;
        }
        let mut comult: Vec<BTreeMap<(usize, usize), Scalar>> = vec![BTreeMap::new(); dim];
        for (i, j, k, c) in comult_entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidInput(format!(
                    "comult index ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            *comult[i].entry((j, k)).or_insert_with(Scalar::zero) += c;
        }
        Ok(HopfAlgebra {
            dim,
            mult: mult
                .into_iter()
                .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
                .collect(),
            unit,
            comult: comult
                .into_iter()
                .map(|m| {
                    m.into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|((j, k), c)| (j, k, c))
                        .collect()
                })
                .collect(),
            counit,
            antipode,
        })
    }

    /// The one-dimensional Hopf algebra k.
    pub fn unit_algebra() -> Self {
        HopfAlgebra::from_tensors(
            1,
            [(0, 0, 0, Scalar::one())],
            vec![Scalar::one()],
            [(0, 0, 0, Scalar::one())],
            vec![Scalar::one()],
            Matrix::identity(1),
        )
        .unwrap()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit_vec(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit_vec(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn comult_basis(&self, i: usize) -> &SparseTensor {
        &self.comult[i]
    }

    pub fn counit_value(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn mult_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        (0..self.dim * self.dim).flat_map(move |idx| {
            let (i, j) = (idx / self.dim, idx % self.dim);
            self.mult[idx].iter().map(move |(k, c)| (i, j, *k, c))
        })
    }

    pub fn comult_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        (0..self.dim)
            .flat_map(move |i| self.comult[i].iter().map(move |(j, k, c)| (i, *j, *k, c)))
    }

    /// Product of two coordinate vectors.
    pub fn mul_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vecops::zero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &(c * &coeff);
                }
            }
        }
        out
    }

    pub fn mul_elements(&self, x: &Element, y: &Element) -> Element {
        Element(self.mul_vec(x, y))
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        vecops::dot(&self.counit, x)
    }

    pub fn antipode_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(x)
    }

    /// Δ of an arbitrary element, as a sparse tensor-square accumulation.
    pub fn comult_of(&self, x: &[Scalar]) -> BTreeMap<(usize, usize), Scalar> {
        let mut acc = BTreeMap::new();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, k, c) in self.comult_basis(i) {
                add_entry(&mut acc, (*j, *k), c * xi);
            }
        }
        prune(&mut acc);
        acc
    }

    /// Δ of an element flattened to a dense vector in the tensor square,
    /// under the crate-wide Kronecker index layout.
    pub fn comult_flat(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vecops::zero(self.dim * self.dim);
        for ((j, k), c) in self.comult_of(x) {
            out[j * self.dim + k] = c;
        }
        out
    }

    /// Operator `y ↦ e_i · y`.
    pub fn left_mult_matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.basis_product(i, j) {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// Operator `y ↦ y · e_i`.
    pub fn right_mult_matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.basis_product(j, i) {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// Operator `y ↦ x · y`.
    pub fn left_mult_of(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j) {
                    let v = &m[(*k, j)] + &(c * xi);
                    m[(*k, j)] = v;
                }
            }
        }
        m
    }

    /// The multiplication map `H ⊗ H → H` as an `n × n²` matrix.
    pub fn mult_map(&self) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n * n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_product(i, j) {
                    m[(*k, i * n + j)] = c.clone();
                }
            }
        }
        m
    }

    /// The comultiplication `H → H ⊗ H` as an `n² × n` matrix.
    pub fn comult_map(&self) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n * n, n);
        for i in 0..n {
            for (j, k, c) in self.comult_basis(i) {
                m[(j * n + k, i)] = c.clone();
            }
        }
        m
    }

    /// `u ∘ ε` as an endomorphism matrix (the convolution unit).
    pub fn unit_counit_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            if self.counit[j].is_zero() {
                continue;
            }
            for (i, u) in self.unit.iter().enumerate() {
                if !u.is_zero() {
                    m[(i, j)] = u * &self.counit[j];
                }
            }
        }
        m
    }

    /// Convolution product of two endomorphism matrices:
    /// `(f ⋆ g)(h) = f(h₁) · g(h₂)`.
    pub fn convolve(&self, f: &Matrix, g: &Matrix) -> Matrix {
        assert_eq!(f.rows(), self.dim, "convolve: dimension mismatch");
        assert_eq!(f.cols(), self.dim, "convolve: dimension mismatch");
        assert_eq!((g.rows(), g.cols()), (self.dim, self.dim));
        let mut out = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            let mut acc = vecops::zero(self.dim);
            for (j, k, c) in self.comult_basis(i) {
                let prod = self.mul_vec(&f.col_to_vec(*j), &g.col_to_vec(*k));
                vecops::add_scaled(&mut acc, &prod, c);
            }
            for (r, v) in acc.into_iter().enumerate() {
                out[(r, i)] = v;
            }
        }
        out
    }

    /// Two-sided adjoint action `h₁ · a · S(h₂)` for basis element `e_i`.
    pub fn adjoint_left_basis(&self, i: usize, a: &[Scalar]) -> Vec<Scalar> {
        let mut out = vecops::zero(self.dim);
        for (j, k, c) in self.comult_basis(i) {
            let sk = self.antipode.col_to_vec(*k);
            let t = self.mul_vec(&self.mul_vec(&vecops::basis(self.dim, *j), a), &sk);
            vecops::add_scaled(&mut out, &t, c);
        }
        out
    }

    /// The other adjoint side: `S(h₁) · a · h₂` for basis element `e_i`.
    pub fn adjoint_right_basis(&self, i: usize, a: &[Scalar]) -> Vec<Scalar> {
        let mut out = vecops::zero(self.dim);
        for (j, k, c) in self.comult_basis(i) {
            let sj = self.antipode.col_to_vec(*j);
            let t = self.mul_vec(&self.mul_vec(&sj, a), &vecops::basis(self.dim, *k));
            vecops::add_scaled(&mut out, &t, c);
        }
        out
    }

    /// Adjoint action `h₁ a S(h₂)` of an arbitrary element `h` on `a`.
    pub fn adjoint_action(&self, h: &Element, a: &Element) -> Element {
        let mut out = vecops::zero(self.dim);
        for (i, hi) in h.iter().enumerate() {
            if hi.is_zero() {
                continue;
            }
            let t = self.adjoint_left_basis(i, a);
            vecops::add_scaled(&mut out, &t, hi);
        }
        Element(out)
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_cocommutative(&self) -> bool {
        for i in 0..self.dim {
            let mut swapped: SparseTensor = self
                .comult_basis(i)
                .iter()
                .map(|(j, k, c)| (*k, *j, c.clone()))
                .collect();
            swapped.sort_by_key(|e| (e.0, e.1));
            if &swapped != self.comult_basis(i) {
                return false;
            }
        }
        true
    }

    /// True when every basis element is grouplike (Δe = e⊗e, ε(e) = 1).
    pub fn has_grouplike_basis(&self) -> bool {
        (0..self.dim).all(|i| {
            self.counit[i].is_one()
                && self.comult_basis(i).len() == 1
                && self.comult_basis(i)[0] == (i, i, Scalar::one())
        })
    }

    // -----------------------------------------------------------------------
    // Axiom verification
    // -----------------------------------------------------------------------

    /// Exhaustive exact verification of all Hopf algebra axioms.
    pub fn verify_axioms(&self) -> AxiomReport {
        let (antipode_l, antipode_r) = self.check_antipode();
        let checks = vec![
            self.check_unit_law(),
            self.check_associativity(),
            self.check_counit_law(),
            self.check_coassociativity(),
            self.check_comult_algebra_map(),
            self.check_counit_algebra_map(),
            antipode_l,
            antipode_r,
        ];
        AxiomReport { checks }
    }

    fn check_unit_law(&self) -> AxiomCheck {
        for i in 0..self.dim {
            let e = vecops::basis(self.dim, i);
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                return AxiomCheck::fail(Axiom::UnitLaw, vec![i]);
            }
        }
        AxiomCheck::pass(Axiom::UnitLaw)
    }

    fn check_associativity(&self) -> AxiomCheck {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j).clone();
                for k in 0..self.dim {
                    let mut lhs: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (l, c) in &ij {
                        for (m, d) in self.basis_product(*l, k) {
                            add_entry(&mut lhs, *m, c * d);
                        }
                    }
                    let mut rhs: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (l, c) in self.basis_product(j, k) {
                        for (m, d) in self.basis_product(i, *l) {
                            add_entry(&mut rhs, *m, c * d);
                        }
                    }
                    prune(&mut lhs);
                    prune(&mut rhs);
                    if lhs != rhs {
                        return AxiomCheck::fail(Axiom::Associativity, vec![i, j, k]);
                    }
                }
            }
        }
        AxiomCheck::pass(Axiom::Associativity)
    }

    fn check_counit_law(&self) -> AxiomCheck {
        for i in 0..self.dim {
            let mut left = vecops::zero(self.dim);
            let mut right = vecops::zero(self.dim);
            for (j, k, c) in self.comult_basis(i) {
                left[*k] += &(c * &self.counit[*j]);
                right[*j] += &(c * &self.counit[*k]);
            }
            let e = vecops::basis(self.dim, i);
            if left != e || right != e {
                return AxiomCheck::fail(Axiom::CounitLaw, vec![i]);
            }
        }
        AxiomCheck::pass(Axiom::CounitLaw)
    }

    fn check_coassociativity(&self) -> AxiomCheck {
        for i in 0..self.dim {
            let mut lhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut rhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (j, k, c) in self.comult_basis(i) {
                for (a, b, d) in self.comult_basis(*j) {
                    add_entry(&mut lhs, (*a, *b, *k), c * d);
                }
                for (a, b, d) in self.comult_basis(*k) {
                    add_entry(&mut rhs, (*j, *a, *b), c * d);
                }
            }
            prune(&mut lhs);
            prune(&mut rhs);
            if lhs != rhs {
                return AxiomCheck::fail(Axiom::Coassociativity, vec![i]);
            }
        }
        AxiomCheck::pass(Axiom::Coassociativity)
    }

    fn check_comult_algebra_map(&self) -> AxiomCheck {
        // Δ(1) = 1 ⊗ 1.
        let mut unit_tensor: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (i, a) in self.unit.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.unit.iter().enumerate() {
                if !b.is_zero() {
                    add_entry(&mut unit_tensor, (i, j), a * b);
                }
            }
        }
        prune(&mut unit_tensor);
        if self.comult_of(&self.unit) != unit_tensor {
            return AxiomCheck::fail(Axiom::ComultIsAlgebraMap, vec![]);
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                // Δ(e_i e_j)
                let mut lhs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
                for (l, c) in self.basis_product(i, j) {
                    for (a, b, d) in self.comult_basis(*l) {
                        add_entry(&mut lhs, (*a, *b), c * d);
                    }
                }
                // Δ(e_i) Δ(e_j) with componentwise multiplication on H ⊗ H.
                let mut rhs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
                for (a1, b1, c1) in self.comult_basis(i) {
                    for (a2, b2, c2) in self.comult_basis(j) {
                        let coeff = c1 * c2;
                        for (x, cx) in self.basis_product(*a1, *a2) {
                            for (y, cy) in self.basis_product(*b1, *b2) {
                                add_entry(&mut rhs, (*x, *y), &(&coeff * cx) * cy);
                            }
                        }
                    }
                }
                prune(&mut lhs);
                prune(&mut rhs);
                if lhs != rhs {
                    return AxiomCheck::fail(Axiom::ComultIsAlgebraMap, vec![i, j]);
                }
            }
        }
        AxiomCheck::pass(Axiom::ComultIsAlgebraMap)
    }

    fn check_counit_algebra_map(&self) -> AxiomCheck {
        if !self.counit_of(&self.unit).is_one() {
            return AxiomCheck::fail(Axiom::CounitIsAlgebraMap, vec![]);
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut lhs = Scalar::zero();
                for (k, c) in self.basis_product(i, j) {
                    lhs += &(c * &self.counit[*k]);
                }
                if lhs != &self.counit[i] * &self.counit[j] {
                    return AxiomCheck::fail(Axiom::CounitIsAlgebraMap, vec![i, j]);
                }
            }
        }
        AxiomCheck::pass(Axiom::CounitIsAlgebraMap)
    }

    fn check_antipode(&self) -> (AxiomCheck, AxiomCheck) {
        let mut left = AxiomCheck::pass(Axiom::AntipodeLeft);
        let mut right = AxiomCheck::pass(Axiom::AntipodeRight);
        for i in 0..self.dim {
            let target = vecops::scale(&self.unit, &self.counit[i]);
            let mut l = vecops::zero(self.dim);
            let mut r = vecops::zero(self.dim);
            for (j, k, c) in self.comult_basis(i) {
                let sj = self.antipode.col_to_vec(*j);
                let sk = self.antipode.col_to_vec(*k);
                let lt = self.mul_vec(&sj, &vecops::basis(self.dim, *k));
                let rt = self.mul_vec(&vecops::basis(self.dim, *j), &sk);
                vecops::add_scaled(&mut l, &lt, c);
                vecops::add_scaled(&mut r, &rt, c);
            }
            if left.passed && l != target {
                left = AxiomCheck::fail(Axiom::AntipodeLeft, vec![i]);
            }
            if right.passed && r != target {
                right = AxiomCheck::fail(Axiom::AntipodeRight, vec![i]);
            }
            if !left.passed && !right.passed {
                break;
            }
        }
        (left, right)
    }

    // -----------------------------------------------------------------------
    // Dual and tensor product
    // -----------------------------------------------------------------------

    /// The dual Hopf algebra on the dual basis: multiplication is the
    /// transpose of Δ, comultiplication the transpose of the multiplication,
    /// unit and counit swap, and the antipode transposes. `dual(dual(H))`
    /// equals `H` entry-wise under the canonical identification.
    pub fn dual(&self) -> HopfAlgebra {
        let n = self.dim;
        let mut mult_entries = Vec::new();
        for (i, j, k, c) in self.comult_entries() {
            // (f_j f_k)(e_i) = coefficient of e_j ⊗ e_k in Δe_i.
            mult_entries.push((j, k, i, c.clone()));
        }
        let mut comult_entries = Vec::new();
        for (i, j, k, c) in self.mult_entries() {
            // (Δ* f_k)(e_i ⊗ e_j) = f_k(e_i e_j).
            comult_entries.push((k, i, j, c.clone()));
        }
        HopfAlgebra::from_tensors(
            n,
            mult_entries,
            self.counit.clone(),
            comult_entries,
            self.unit.clone(),
            self.antipode.transpose(),
        )
        .expect("dual construction cannot fail on a well-formed input")
    }

    /// Componentwise tensor product Hopf algebra on the Kronecker basis:
    /// basis vector `(i, a)` of `A ⊗ L` sits at index `i · dim(L) + a`.
    pub fn tensor(&self, other: &HopfAlgebra) -> HopfAlgebra {
        let (n, m) = (self.dim, other.dim);
        let mut mult_entries = Vec::new();
        for (i, j, k, c) in self.mult_entries() {
            for (a, b, d, c2) in other.mult_entries() {
                mult_entries.push((i * m + a, j * m + b, k * m + d, c * c2));
            }
        }
        let mut comult_entries = Vec::new();
        for (i, j, k, c) in self.comult_entries() {
            for (a, b, d, c2) in other.comult_entries() {
                comult_entries.push((i * m + a, j * m + b, k * m + d, c * c2));
            }
        }
        HopfAlgebra::from_tensors(
            n * m,
            mult_entries,
            vecops::tensor(&self.unit, &other.unit),
            comult_entries,
            vecops::tensor(&self.counit, &other.counit),
            self.antipode.kron(&other.antipode),
        )
        .expect("tensor construction cannot fail on well-formed inputs")
    }

    // -----------------------------------------------------------------------
    // Integrals, semisimplicity, center
    // -----------------------------------------------------------------------

    /// The space of left integrals `{Λ : hΛ = ε(h)Λ for all h}`.
    pub fn left_integral_space(&self) -> Subspace {
        let mut stacked = Matrix::zeros(0, self.dim);
        for i in 0..self.dim {
            let mut block = self.left_mult_matrix(i);
            for d in 0..self.dim {
                let v = &block[(d, d)] - &self.counit[i];
                block[(d, d)] = v;
            }
            stacked = stacked.vstack(&block);
        }
        let kernel = stacked.kernel_basis();
        Subspace::from_vectors(self.dim, &kernel)
    }

    /// Semisimplicity over characteristic zero: the counit does not vanish
    /// on the left-integral space.
    pub fn is_semisimple(&self) -> bool {
        let space = self.left_integral_space();
        space
            .basis_rows()
            .iter()
            .any(|v| !self.counit_of(v).is_zero())
    }

    /// The unique two-sided idempotent integral of a semisimple Hopf algebra:
    /// `hΛ = ε(h)Λ = Λh`, `Λ² = Λ`, `ε(Λ) = 1`.
    pub fn integral(&self) -> Result<Element> {
        let space = self.left_integral_space();
        if space.dim() != 1 {
            return Err(Error::NoIntegral(space.dim()));
        }
        let raw = space.basis().row_to_vec(0);
        let eps = self.counit_of(&raw);
        if eps.is_zero() {
            return Err(Error::NotSemisimple);
        }
        let lambda = vecops::scale(&raw, &eps.inv());
        // Cross-checks; failures indicate malformed input.
        let sq = self.mul_vec(&lambda, &lambda);
        if sq != lambda {
            return Err(Error::Structure("integral is not idempotent".into()));
        }
        for i in 0..self.dim {
            let rhs = vecops::scale(&lambda, &self.counit[i]);
            if self.mul_vec(&lambda, &vecops::basis(self.dim, i)) != rhs {
                return Err(Error::Structure(
                    "left integral is not a right integral".into(),
                ));
            }
        }
        Ok(Element(lambda))
    }

    /// Center as a subspace: solutions of `x·e_i = e_i·x` for all `i`.
    pub fn center(&self) -> Subspace {
        let mut stacked = Matrix::zeros(0, self.dim);
        for i in 0..self.dim {
            let block = &self.left_mult_matrix(i) - &self.right_mult_matrix(i);
            stacked = stacked.vstack(&block);
        }
        Subspace::from_vectors(self.dim, &stacked.kernel_basis())
    }
}

fn add_entry<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, value: Scalar) {
    if value.is_zero() {
        return;
    }
    *map.entry(key).or_insert_with(Scalar::zero) += value;
}

fn prune<K: Ord>(map: &mut BTreeMap<K, Scalar>) {
    map.retain(|_, v| !v.is_zero());
}

// ---------------------------------------------------------------------------
// Axiom report
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Axiom {
    UnitLaw,
    Associativity,
    CounitLaw,
    Coassociativity,
    ComultIsAlgebraMap,
    CounitIsAlgebraMap,
    AntipodeLeft,
    AntipodeRight,
}

impl Axiom {
    pub fn name(&self) -> &'static str {
        match self {
            Axiom::UnitLaw => "unit law",
            Axiom::Associativity => "associativity",
            Axiom::CounitLaw => "counit law",
            Axiom::Coassociativity => "coassociativity",
            Axiom::ComultIsAlgebraMap => "comultiplication is an algebra map",
            Axiom::CounitIsAlgebraMap => "counit is an algebra map",
            Axiom::AntipodeLeft => "antipode (left)",
            Axiom::AntipodeRight => "antipode (right)",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    /// Basis indices of the first counterexample.
    pub counterexample: Option<Vec<usize>>,
}

impl AxiomCheck {
    fn pass(axiom: Axiom) -> Self {
        AxiomCheck {
            axiom,
            passed: true,
            counterexample: None,
        }
    }

    fn fail(axiom: Axiom, witness: Vec<usize>) -> Self {
        AxiomCheck {
            axiom,
            passed: false,
            counterexample: Some(witness),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("Hopf algebra axioms");
        for c in &self.checks {
            r.push(Check::of(
                c.axiom.name(),
                c.passed,
                format!(
                    "counterexample at basis indices {:?}",
                    c.counterexample.clone().unwrap_or_default()
                ),
            ));
        }
        r
    }
}

/// Verify the axioms, returning the report (failures are report entries).
pub fn verify_axioms(h: &HopfAlgebra) -> AxiomReport {
    h.verify_axioms()
}

/// Require a valid Hopf algebra, turning failures into an error.
pub fn require_valid(h: &HopfAlgebra) -> Result<()> {
    let report = h.verify_axioms();
    if let Some(fail) = report.first_failure() {
        return Err(Error::AxiomsFailed(format!(
            "{} fails at basis indices {:?}",
            fail.axiom.name(),
            fail.counterexample.clone().unwrap_or_default()
        )));
    }
    Ok(())
}
