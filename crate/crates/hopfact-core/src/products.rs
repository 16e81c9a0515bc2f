//! Matched pairs, bicrossed products, smash products, and extraction of the
//! matched pair from a factorization.
//!
//! Index conventions follow the crate-wide Kronecker layout with the left
//! tensor factor major: the bicrossed product lives on A ⊗ L with basis
//! `(i, a) ↦ i·dim(L) + a`, while both action tensors eat L ⊗ A with input
//! column `(l, a) ↦ l·dim(A) + a`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{vecops, Matrix, Scalar};
use crate::hopf::{Element, HopfAlgebra, HopfMorphism};
use crate::report::{Check, Report};
use crate::subobjects::SubHopf;

/// Two Hopf algebras with a left action ▷ : L⊗A → A and a right action
/// ◁ : L⊗A → L, candidates for a matched pair.
#[derive(Clone, Debug)]
pub struct MatchedPair {
    pub a: Arc<HopfAlgebra>,
    pub l: Arc<HopfAlgebra>,
    /// ▷ as a `dim(A) × dim(L)·dim(A)` matrix.
    pub act_r: Matrix,
    /// ◁ as a `dim(L) × dim(L)·dim(A)` matrix.
    pub act_l: Matrix,
}

impl MatchedPair {
    pub fn new(a: Arc<HopfAlgebra>, l: Arc<HopfAlgebra>, act_r: Matrix, act_l: Matrix) -> Self {
        assert_eq!(act_r.rows(), a.dim(), "▷ must land in A");
        assert_eq!(act_r.cols(), l.dim() * a.dim(), "▷ must eat L⊗A");
        assert_eq!(act_l.rows(), l.dim(), "◁ must land in L");
        assert_eq!(act_l.cols(), l.dim() * a.dim(), "◁ must eat L⊗A");
        MatchedPair { a, l, act_r, act_l }
    }

    /// The pair with trivial actions `l ▷ a = ε(l)a` and `l ◁ a = ε(a)l`,
    /// whose bicrossed product is the tensor product.
    pub fn trivial(a: Arc<HopfAlgebra>, l: Arc<HopfAlgebra>) -> Self {
        let (p, q) = (a.dim(), l.dim());
        let mut act_r = Matrix::zeros(p, q * p);
        let mut act_l = Matrix::zeros(q, q * p);
        for i in 0..q {
            for j in 0..p {
                act_r[(j, i * p + j)] = l.counit_value(i).clone();
                act_l[(i, i * p + j)] = a.counit_value(j).clone();
            }
        }
        MatchedPair::new(a, l, act_r, act_l)
    }

    /// `f_i ▷ e_j` in A coordinates.
    pub fn act_r_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.act_r.col_to_vec(i * self.a.dim() + j)
    }

    /// `f_i ◁ e_j` in L coordinates.
    pub fn act_l_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.act_l.col_to_vec(i * self.a.dim() + j)
    }

    /// Bilinear extension of ▷.
    pub fn act_r_of(&self, l: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let mut out = vecops::zero(self.a.dim());
        for (i, li) in l.iter().enumerate() {
            if li.is_zero() {
                continue;
            }
            for (j, aj) in a.iter().enumerate() {
                if aj.is_zero() {
                    continue;
                }
                let col = self.act_r_basis(i, j);
                vecops::add_scaled(&mut out, &col, &(li * aj));
            }
        }
        out
    }

    /// Bilinear extension of ◁.
    pub fn act_l_of(&self, l: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let mut out = vecops::zero(self.l.dim());
        for (i, li) in l.iter().enumerate() {
            if li.is_zero() {
                continue;
            }
            for (j, aj) in a.iter().enumerate() {
                if aj.is_zero() {
                    continue;
                }
                let col = self.act_l_basis(i, j);
                vecops::add_scaled(&mut out, &col, &(li * aj));
            }
        }
        out
    }
}

/// Exhaustive verification of the matched-pair axioms on basis tuples.
/// Each failed condition records its first counterexample.
pub fn validate_matched_pair(mp: &MatchedPair) -> Report {
    let mut report = Report::new("matched pair axioms");
    let (a, l) = (&mp.a, &mp.l);
    let (p, q) = (a.dim(), l.dim());

    // ▷ is a coalgebra map.
    let mut check = Check::pass("▷ is a coalgebra map");
    'r_coalg: for i in 0..q {
        for j in 0..p {
            let img = mp.act_r_basis(i, j);
            if a.counit_of(&img) != l.counit_value(i) * a.counit_value(j) {
                check = Check::fail("▷ is a coalgebra map", format!("counit at (l{i}, a{j})"));
                break 'r_coalg;
            }
            let lhs = a.comult_of(&img);
            let mut rhs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
            for (i1, i2, c) in l.comult_basis(i) {
                for (j1, j2, d) in a.comult_basis(j) {
                    let u = mp.act_r_basis(*i1, *j1);
                    let v = mp.act_r_basis(*i2, *j2);
                    accumulate_tensor(&mut rhs, &u, &v, &(c * d));
                }
            }
            rhs.retain(|_, v| !v.is_zero());
            if lhs != rhs {
                check = Check::fail("▷ is a coalgebra map", format!("comult at (l{i}, a{j})"));
                break 'r_coalg;
            }
        }
    }
    report.push(check);

    // ◁ is a coalgebra map.
    let mut check = Check::pass("◁ is a coalgebra map");
    'l_coalg: for i in 0..q {
        for j in 0..p {
            let img = mp.act_l_basis(i, j);
            if l.counit_of(&img) != l.counit_value(i) * a.counit_value(j) {
                check = Check::fail("◁ is a coalgebra map", format!("counit at (l{i}, a{j})"));
                break 'l_coalg;
            }
            let lhs = l.comult_of(&img);
            let mut rhs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
            for (i1, i2, c) in l.comult_basis(i) {
                for (j1, j2, d) in a.comult_basis(j) {
                    let u = mp.act_l_basis(*i1, *j1);
                    let v = mp.act_l_basis(*i2, *j2);
                    accumulate_tensor(&mut rhs, &u, &v, &(c * d));
                }
            }
            rhs.retain(|_, v| !v.is_zero());
            if lhs != rhs {
                check = Check::fail("◁ is a coalgebra map", format!("comult at (l{i}, a{j})"));
                break 'l_coalg;
            }
        }
    }
    report.push(check);

    // (A, ▷) is a left L-module: 1_L ▷ a = a and (lh) ▷ a = l ▷ (h ▷ a).
    let mut check = Check::pass("(A, ▷) is a left L-module");
    'module_a: {
        for j in 0..p {
            let img = mp.act_r_of(l.unit_vec(), &vecops::basis(p, j));
            if img != vecops::basis(p, j) {
                check = Check::fail("(A, ▷) is a left L-module", format!("1_L ▷ a{j} ≠ a{j}"));
                break 'module_a;
            }
        }
        for i1 in 0..q {
            for i2 in 0..q {
                let prod = l.mul_vec(&vecops::basis(q, i1), &vecops::basis(q, i2));
                for j in 0..p {
                    let lhs = mp.act_r_of(&prod, &vecops::basis(p, j));
                    let inner = mp.act_r_basis(i2, j);
                    let rhs = mp.act_r_of(&vecops::basis(q, i1), &inner);
                    if lhs != rhs {
                        check = Check::fail(
                            "(A, ▷) is a left L-module",
                            format!("associativity at (l{i1}, l{i2}, a{j})"),
                        );
                        break 'module_a;
                    }
                }
            }
        }
    }
    report.push(check);

    // (L, ◁) is a right A-module: l ◁ 1_A = l and l ◁ (ab) = (l ◁ a) ◁ b.
    let mut check = Check::pass("(L, ◁) is a right A-module");
    'module_l: {
        for i in 0..q {
            let img = mp.act_l_of(&vecops::basis(q, i), a.unit_vec());
            if img != vecops::basis(q, i) {
                check = Check::fail("(L, ◁) is a right A-module", format!("l{i} ◁ 1_A ≠ l{i}"));
                break 'module_l;
            }
        }
        for i in 0..q {
            for j1 in 0..p {
                for j2 in 0..p {
                    let prod = a.mul_vec(&vecops::basis(p, j1), &vecops::basis(p, j2));
                    let lhs = mp.act_l_of(&vecops::basis(q, i), &prod);
                    let inner = mp.act_l_basis(i, j1);
                    let rhs = mp.act_l_of(&inner, &vecops::basis(p, j2));
                    if lhs != rhs {
                        check = Check::fail(
                            "(L, ◁) is a right A-module",
                            format!("associativity at (l{i}, a{j1}, a{j2})"),
                        );
                        break 'module_l;
                    }
                }
            }
        }
    }
    report.push(check);

    // Unit conditions: l ▷ 1_A = ε(l)1_A and 1_L ◁ a = ε(a)1_L.
    let mut check = Check::pass("unit conditions");
    'units: {
        for i in 0..q {
            let img = mp.act_r_of(&vecops::basis(q, i), a.unit_vec());
            if img != vecops::scale(a.unit_vec(), l.counit_value(i)) {
                check = Check::fail("unit conditions", format!("l{i} ▷ 1_A ≠ ε(l{i})1_A"));
                break 'units;
            }
        }
        for j in 0..p {
            let img = mp.act_l_of(l.unit_vec(), &vecops::basis(p, j));
            if img != vecops::scale(l.unit_vec(), a.counit_value(j)) {
                check = Check::fail("unit conditions", format!("1_L ◁ a{j} ≠ ε(a{j})1_L"));
                break 'units;
            }
        }
    }
    report.push(check);

    // l ▷ (ab) = (l₁ ▷ a₁)((l₂ ◁ a₂) ▷ b).
    let mut check = Check::pass("left action distributes over products");
    'compat_r: for i in 0..q {
        for j1 in 0..p {
            for j2 in 0..p {
                let prod = a.mul_vec(&vecops::basis(p, j1), &vecops::basis(p, j2));
                let lhs = mp.act_r_of(&vecops::basis(q, i), &prod);
                let mut rhs = vecops::zero(p);
                for (i1, i2, c) in l.comult_basis(i) {
                    for (a1, a2, d) in a.comult_basis(j1) {
                        let first = mp.act_r_basis(*i1, *a1);
                        let shifted = mp.act_l_basis(*i2, *a2);
                        let second = mp.act_r_of(&shifted, &vecops::basis(p, j2));
                        let term = a.mul_vec(&first, &second);
                        vecops::add_scaled(&mut rhs, &term, &(c * d));
                    }
                }
                if lhs != rhs {
                    check = Check::fail(
                        "left action distributes over products",
                        format!("counterexample at (l{i}, a{j1}, a{j2})"),
                    );
                    break 'compat_r;
                }
            }
        }
    }
    report.push(check);

    // (lh) ◁ a = (l ◁ (h₁ ▷ a₁))(h₂ ◁ a₂).
    let mut check = Check::pass("right action distributes over products");
    'compat_l: for i1 in 0..q {
        for i2 in 0..q {
            for j in 0..p {
                let prod = l.mul_vec(&vecops::basis(q, i1), &vecops::basis(q, i2));
                let lhs = mp.act_l_of(&prod, &vecops::basis(p, j));
                let mut rhs = vecops::zero(q);
                for (h1, h2, c) in l.comult_basis(i2) {
                    for (a1, a2, d) in a.comult_basis(j) {
                        let inner = mp.act_r_basis(*h1, *a1);
                        let first = mp.act_l_of(&vecops::basis(q, i1), &inner);
                        let second = mp.act_l_basis(*h2, *a2);
                        let term = l.mul_vec(&first, &second);
                        vecops::add_scaled(&mut rhs, &term, &(c * d));
                    }
                }
                if lhs != rhs {
                    check = Check::fail(
                        "right action distributes over products",
                        format!("counterexample at (l{i1}, l{i2}, a{j})"),
                    );
                    break 'compat_l;
                }
            }
        }
    }
    report.push(check);

    // l₁ ◁ a₁ ⊗ l₂ ▷ a₂ = l₂ ◁ a₂ ⊗ l₁ ▷ a₁.
    let mut check = Check::pass("middle interchange");
    'middle: for i in 0..q {
        for j in 0..p {
            let mut lhs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
            let mut rhs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
            for (i1, i2, c) in l.comult_basis(i) {
                for (a1, a2, d) in a.comult_basis(j) {
                    let coeff = c * d;
                    accumulate_tensor(
                        &mut lhs,
                        &mp.act_l_basis(*i1, *a1),
                        &mp.act_r_basis(*i2, *a2),
                        &coeff,
                    );
                    accumulate_tensor(
                        &mut rhs,
                        &mp.act_l_basis(*i2, *a2),
                        &mp.act_r_basis(*i1, *a1),
                        &coeff,
                    );
                }
            }
            lhs.retain(|_, v| !v.is_zero());
            rhs.retain(|_, v| !v.is_zero());
            if lhs != rhs {
                check = Check::fail("middle interchange", format!("counterexample at (l{i}, a{j})"));
                break 'middle;
            }
        }
    }
    report.push(check);

    report
}

fn accumulate_tensor(
    acc: &mut BTreeMap<(usize, usize), Scalar>,
    u: &[Scalar],
    v: &[Scalar],
    coeff: &Scalar,
) {
    if coeff.is_zero() {
        return;
    }
    for (x, cx) in u.iter().enumerate() {
        if cx.is_zero() {
            continue;
        }
        for (y, cy) in v.iter().enumerate() {
            if cy.is_zero() {
                continue;
            }
            let val = &(cx * cy) * coeff;
            *acc.entry((x, y)).or_insert_with(Scalar::zero) += val;
        }
    }
}

/// The bicrossed product A ⋈ L of a validated matched pair: multiplication
/// `(a ⋈ l)(b ⋈ h) = a(l₁ ▷ b₁) ⋈ (l₂ ◁ b₂)h` on the tensor coalgebra, with
/// antipode `S(a ⋈ l) = (1 ⋈ S_L l)(S_A a ⋈ 1)`.
pub fn bicrossed(mp: &MatchedPair) -> Result<HopfAlgebra> {
    let report = validate_matched_pair(mp);
    if !report.passed() {
        return Err(Error::InvalidMatchedPair(
            report.first_failure().map(|c| c.name.clone()).unwrap_or_default(),
        ));
    }
    bicrossed_unchecked(mp)
}

fn bicrossed_unchecked(mp: &MatchedPair) -> Result<HopfAlgebra> {
    let (a, l) = (&mp.a, &mp.l);
    let (p, q) = (a.dim(), l.dim());
    let n = p * q;
    let idx = |i: usize, x: usize| i * q + x;
    // Multiplication table on basis pairs.
    let mut table: Vec<Vec<Scalar>> = vec![vecops::zero(n); n * n];
    for i in 0..p {
        for x in 0..q {
            for j in 0..p {
                for y in 0..q {
                    let out = &mut table[idx(i, x) * n + idx(j, y)];
                    for (x1, x2, c) in l.comult_basis(x) {
                        for (j1, j2, d) in a.comult_basis(j) {
                            let acted = mp.act_r_basis(*x1, *j1);
                            let left = a.mul_vec(&vecops::basis(p, i), &acted);
                            let shifted = mp.act_l_basis(*x2, *j2);
                            let right = l.mul_vec(&shifted, &vecops::basis(q, y));
                            let coeff = c * d;
                            for (u, cu) in left.iter().enumerate() {
                                if cu.is_zero() {
                                    continue;
                                }
                                for (v, cv) in right.iter().enumerate() {
                                    if cv.is_zero() {
                                        continue;
                                    }
                                    out[idx(u, v)] += &(&(&coeff * cu) * cv);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mul = |s: &[Scalar], t: &[Scalar]| -> Vec<Scalar> {
        let mut out = vecops::zero(n);
        for (i, si) in s.iter().enumerate() {
            if si.is_zero() {
                continue;
            }
            for (j, tj) in t.iter().enumerate() {
                if tj.is_zero() {
                    continue;
                }
                vecops::add_scaled(&mut out, &table[i * n + j], &(si * tj));
            }
        }
        out
    };
    let mut mult_entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in table[i * n + j].iter().enumerate() {
                if !c.is_zero() {
                    mult_entries.push((i, j, k, c.clone()));
                }
            }
        }
    }
    // Tensor coalgebra.
    let mut comult_entries = Vec::new();
    for i in 0..p {
        for x in 0..q {
            for (j, k, c) in a.comult_basis(i) {
                for (y, z, d) in l.comult_basis(x) {
                    comult_entries.push((idx(i, x), idx(*j, *y), idx(*k, *z), c * d));
                }
            }
        }
    }
    let unit = vecops::tensor(a.unit_vec(), l.unit_vec());
    let counit = vecops::tensor(a.counit_vec(), l.counit_vec());
    // Antipode via the product: S(a ⋈ l) = (1 ⋈ S_L l)(S_A a ⋈ 1).
    let mut antipode = Matrix::zeros(n, n);
    for i in 0..p {
        for x in 0..q {
            let sa = a.antipode_of(&vecops::basis(p, i));
            let sl = l.antipode_of(&vecops::basis(q, x));
            let left = vecops::tensor(a.unit_vec(), &sl);
            let right = vecops::tensor(&sa, l.unit_vec());
            let img = mul(&left, &right);
            for (r, c) in img.into_iter().enumerate() {
                antipode[(r, idx(i, x))] = c;
            }
        }
    }
    let h = HopfAlgebra::from_tensors(n, mult_entries, unit, comult_entries, counit, antipode)?;
    let axioms = h.verify_axioms();
    if !axioms.all_pass() {
        return Err(Error::Structure(format!(
            "bicrossed product fails axiom: {}",
            axioms.first_failure().unwrap().axiom.name()
        )));
    }
    Ok(h)
}

/// The smash product A # L: the bicrossed product with trivial right action,
/// so the multiplication specializes to `(a#l)(a′#l′) = a(l₁·a′) # l₂l′`.
pub fn smash(a: Arc<HopfAlgebra>, l: Arc<HopfAlgebra>, act: &Matrix) -> Result<HopfAlgebra> {
    let (p, q) = (a.dim(), l.dim());
    let mut act_l = Matrix::zeros(q, q * p);
    for i in 0..q {
        for j in 0..p {
            act_l[(i, i * p + j)] = a.counit_value(j).clone();
        }
    }
    let mp = MatchedPair::new(a, l, act.clone(), act_l);
    bicrossed(&mp)
}

/// Recover the matched pair from a factorization H = A·L: invert the
/// multiplication map `m : A ⊗ L → H`, form `μ = m⁻¹ ∘ (multiplication on
/// L ⊗ A)`, and read the actions off as `▷ = (id ⊗ ε)∘μ`, `◁ = (ε ⊗ id)∘μ`.
pub fn extract_matched_pair(
    h: &Arc<HopfAlgebra>,
    a: &SubHopf,
    l: &SubHopf,
) -> Result<MatchedPair> {
    let (p, q) = (a.dim(), l.dim());
    let n = h.dim();
    if p * q != n {
        return Err(Error::NotAFactorization(format!(
            "|A|·|L| = {p}·{q} ≠ {n} = |H|"
        )));
    }
    let m = multiplication_map(h, a, l);
    let minv = m
        .inverse()
        .ok_or_else(|| Error::NotAFactorization("multiplication map A⊗L → H is singular".into()))?;
    let a_rows = a.space().basis_rows();
    let l_rows = l.space().basis_rows();
    let mut act_r = Matrix::zeros(p, q * p);
    let mut act_l = Matrix::zeros(q, q * p);
    for i in 0..q {
        for j in 0..p {
            let la = h.mul_vec(&l_rows[i], &a_rows[j]);
            let mu = minv.apply(&la); // coordinates in A ⊗ L, A-major
            for x in 0..p {
                let mut r_acc = Scalar::zero();
                for y in 0..q {
                    let v = &mu[x * q + y];
                    if !v.is_zero() {
                        r_acc += &(v * l.induced().counit_value(y));
                    }
                }
                act_r[(x, i * p + j)] = r_acc;
            }
            for y in 0..q {
                let mut l_acc = Scalar::zero();
                for x in 0..p {
                    let v = &mu[x * q + y];
                    if !v.is_zero() {
                        l_acc += &(v * a.induced().counit_value(x));
                    }
                }
                act_l[(y, i * p + j)] = l_acc;
            }
        }
    }
    let mp = MatchedPair::new(a.induced().clone(), l.induced().clone(), act_r, act_l);
    let report = validate_matched_pair(&mp);
    if !report.passed() {
        return Err(Error::InvalidMatchedPair(format!(
            "extracted pair fails: {}",
            report.first_failure().map(|c| c.name.clone()).unwrap_or_default()
        )));
    }
    if a.is_normal() {
        verify_normal_extraction(h, a, l, &mp)?;
    }
    Ok(mp)
}

/// For a normal left factor the extracted ◁ must be trivial and ▷ must be
/// the adjoint action `l ▷ a = l₁ a S(l₂)`.
fn verify_normal_extraction(
    h: &Arc<HopfAlgebra>,
    a: &SubHopf,
    l: &SubHopf,
    mp: &MatchedPair,
) -> Result<()> {
    let (p, q) = (a.dim(), l.dim());
    let a_rows = a.space().basis_rows();
    let l_rows = l.space().basis_rows();
    for i in 0..q {
        for j in 0..p {
            let expected_l = vecops::scale(
                &vecops::basis(q, i),
                a.induced().counit_value(j),
            );
            if mp.act_l_basis(i, j) != expected_l {
                return Err(Error::Structure(
                    "extracted right action is not trivial although A is normal".into(),
                ));
            }
            let adj = h.adjoint_action(
                &Element(l_rows[i].clone()),
                &Element(a_rows[j].clone()),
            );
            let adj_in_a = a.restrict_vec(&adj).ok_or_else(|| {
                Error::Structure("adjoint action leaves A although A is normal".into())
            })?;
            if mp.act_r_basis(i, j) != adj_in_a {
                return Err(Error::Structure(
                    "extracted left action differs from the adjoint action".into(),
                ));
            }
        }
    }
    Ok(())
}

/// The multiplication map A ⊗ L → H on the Kronecker basis, as an n × n
/// matrix (column `(i, j) ↦ i·dim(L) + j` is `a_i · l_j`).
pub fn multiplication_map(h: &HopfAlgebra, a: &SubHopf, l: &SubHopf) -> Matrix {
    let (p, q) = (a.dim(), l.dim());
    let a_rows = a.space().basis_rows();
    let l_rows = l.space().basis_rows();
    let mut m = Matrix::zeros(h.dim(), p * q);
    for i in 0..p {
        for j in 0..q {
            let prod = h.mul_vec(&a_rows[i], &l_rows[j]);
            for (r, c) in prod.into_iter().enumerate() {
                m[(r, i * q + j)] = c;
            }
        }
    }
    m
}

/// Rebuild H as `bicrossed(extract_matched_pair(H, A, L))` and verify that
/// the multiplication map `a ⊗ l ↦ al` is a Hopf algebra isomorphism onto H.
pub fn rebuild_and_compare(
    h: &Arc<HopfAlgebra>,
    a: &SubHopf,
    l: &SubHopf,
) -> Result<HopfMorphism> {
    let mp = extract_matched_pair(h, a, l)?;
    let rebuilt = Arc::new(bicrossed(&mp)?);
    let m = multiplication_map(h, a, l);
    let phi = HopfMorphism::verified(rebuilt, h.clone(), m);
    phi.require_isomorphism()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, group_algebra, span_of_elements, symmetric3};

    fn arc(h: HopfAlgebra) -> Arc<HopfAlgebra> {
        Arc::new(h)
    }

    /// Conjugation action of kC2 on kC3 inside S3: t ▷ r^k = r^{-k}.
    fn adjoint_action_matrix() -> Matrix {
        let mut act = Matrix::zeros(3, 6);
        for j in 0..3 {
            act[(j, j)] = Scalar::one(); // 1 ▷ r^j = r^j
            act[((3 - j) % 3, 3 + j)] = Scalar::one(); // t ▷ r^j = r^{3-j}
        }
        act
    }

    #[test]
    fn trivial_actions_validate_and_give_tensor() {
        let a = arc(group_algebra(&cyclic(2)));
        let l = arc(group_algebra(&cyclic(3)));
        let mp = MatchedPair::trivial(a.clone(), l.clone());
        assert!(validate_matched_pair(&mp).passed());
        let b = bicrossed(&mp).unwrap();
        assert_eq!(b, a.tensor(&l));
    }

    #[test]
    fn adjoint_matched_pair_validates() {
        let a = arc(group_algebra(&cyclic(3)));
        let l = arc(group_algebra(&cyclic(2)));
        let mut act_l = Matrix::zeros(2, 6);
        for i in 0..2 {
            for j in 0..3 {
                act_l[(i, i * 3 + j)] = Scalar::one(); // trivial: ε_A(a_j) = 1
            }
        }
        let mp = MatchedPair::new(a, l, adjoint_action_matrix(), act_l);
        assert!(validate_matched_pair(&mp).passed());
        let b = bicrossed(&mp).unwrap();
        assert_eq!(b.dim(), 6);
        assert!(b.verify_axioms().all_pass());
        assert!(!b.is_commutative());
        // Unit and counit of the product are the tensor ones.
        assert_eq!(
            b.unit_vec(),
            &vecops::tensor(
                group_algebra(&cyclic(3)).unit_vec(),
                group_algebra(&cyclic(2)).unit_vec()
            )[..]
        );
        assert_eq!(b.counit_vec(), &vec![Scalar::one(); 6][..]);
    }

    #[test]
    fn corrupted_action_fails_with_counterexample() {
        // Shift action t ▷ r^k = r^{k+1}: not a module algebra action.
        let a = arc(group_algebra(&cyclic(3)));
        let l = arc(group_algebra(&cyclic(2)));
        let mut act = Matrix::zeros(3, 6);
        for j in 0..3 {
            act[(j, j)] = Scalar::one();
            act[((j + 1) % 3, 3 + j)] = Scalar::one();
        }
        let mut act_l = Matrix::zeros(2, 6);
        for i in 0..2 {
            for j in 0..3 {
                act_l[(i, i * 3 + j)] = Scalar::one();
            }
        }
        let mp = MatchedPair::new(a, l, act, act_l);
        let report = validate_matched_pair(&mp);
        assert!(!report.passed());
        let distributes = report
            .checks
            .iter()
            .find(|c| c.name == "left action distributes over products")
            .unwrap();
        assert!(!distributes.passed);
        assert!(distributes.detail.as_ref().unwrap().contains("counterexample"));
        assert!(bicrossed(&mp).is_err());
    }

    #[test]
    fn smash_with_trivial_action_is_tensor() {
        let a = arc(group_algebra(&cyclic(3)));
        let l = arc(group_algebra(&cyclic(2)));
        let mut act = Matrix::zeros(3, 6);
        for i in 0..2 {
            for j in 0..3 {
                act[(j, i * 3 + j)] = Scalar::one();
            }
        }
        let s = smash(a.clone(), l.clone(), &act).unwrap();
        assert_eq!(s, a.tensor(&l));
    }

    #[test]
    fn extract_from_tensor_product_gives_trivial_actions() {
        let a0 = group_algebra(&cyclic(2));
        let l0 = group_algebra(&cyclic(3));
        let t = arc(a0.tensor(&l0));
        // Canonical factors kC2 ⊗ 1 and 1 ⊗ kC3.
        let a = SubHopf::new(&t, span_of_elements(6, &[0, 3])).unwrap();
        let l = SubHopf::new(&t, span_of_elements(6, &[0, 1, 2])).unwrap();
        let mp = extract_matched_pair(&t, &a, &l).unwrap();
        let trivial = MatchedPair::trivial(a.induced().clone(), l.induced().clone());
        assert_eq!(mp.act_r, trivial.act_r);
        assert_eq!(mp.act_l, trivial.act_l);
    }

    #[test]
    fn extract_from_ks3_gives_conjugation() {
        let h = arc(group_algebra(&symmetric3()));
        let a = SubHopf::new(&h, span_of_elements(6, &[0, 1, 2])).unwrap();
        let l = SubHopf::new(&h, span_of_elements(6, &[0, 3])).unwrap();
        assert!(a.is_normal());
        let mp = extract_matched_pair(&h, &a, &l).unwrap();
        assert_eq!(mp.act_r, adjoint_action_matrix());
        // ◁ is trivial.
        let trivial = MatchedPair::trivial(a.induced().clone(), l.induced().clone());
        assert_eq!(mp.act_l, trivial.act_l);
    }

    #[test]
    fn extract_whole_by_whole_is_not_a_factorization() {
        let h = arc(group_algebra(&cyclic(2)));
        let full = SubHopf::full(&h);
        assert!(matches!(
            extract_matched_pair(&h, &full, &full),
            Err(Error::NotAFactorization(_))
        ));
    }

    #[test]
    fn rebuild_round_trips() {
        // Tensor case.
        let a0 = group_algebra(&cyclic(2));
        let l0 = group_algebra(&cyclic(3));
        let t = arc(a0.tensor(&l0));
        let a = SubHopf::new(&t, span_of_elements(6, &[0, 3])).unwrap();
        let l = SubHopf::new(&t, span_of_elements(6, &[0, 1, 2])).unwrap();
        let phi = rebuild_and_compare(&t, &a, &l).unwrap();
        assert!(phi.is_isomorphism());

        // kS3 from (kC3, kC2).
        let h = arc(group_algebra(&symmetric3()));
        let a = SubHopf::new(&h, span_of_elements(6, &[0, 1, 2])).unwrap();
        let l = SubHopf::new(&h, span_of_elements(6, &[0, 3])).unwrap();
        let phi = rebuild_and_compare(&h, &a, &l).unwrap();
        assert!(phi.is_isomorphism());

        // kC6 from (kC2, kC3): abelian, both actions trivial.
        let c6 = arc(group_algebra(&cyclic(6)));
        let a = SubHopf::new(&c6, span_of_elements(6, &[0, 3])).unwrap();
        let l = SubHopf::new(&c6, span_of_elements(6, &[0, 2, 4])).unwrap();
        let mp = extract_matched_pair(&c6, &a, &l).unwrap();
        let trivial = MatchedPair::trivial(a.induced().clone(), l.induced().clone());
        assert_eq!(mp.act_r, trivial.act_r);
        assert_eq!(mp.act_l, trivial.act_l);
        let phi = rebuild_and_compare(&c6, &a, &l).unwrap();
        assert!(phi.is_isomorphism());
    }
}
