//! Subspaces of a Hopf algebra as sub(co)algebras: closure operators,
//! Hopf-subalgebra and normality tests, products AL, augmentation ideals,
//! quotients H//A and the dual-quotient embedding.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{vecops, Matrix, Scalar, Subspace};
use crate::hopf::{Element, HopfAlgebra, HopfMorphism};

/// Exactly verified closure properties of a subspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubalgebraFlags {
    pub contains_unit: bool,
    pub is_subalgebra: bool,
    pub is_subcoalgebra: bool,
    pub is_antipode_stable: bool,
}

impl SubalgebraFlags {
    pub fn is_hopf_subalgebra(&self) -> bool {
        self.contains_unit && self.is_subalgebra && self.is_subcoalgebra && self.is_antipode_stable
    }
}

/// A Hopf subalgebra: the subspace, its verified flags, and the induced
/// structure constants in the RREF basis of the subspace.
#[derive(Clone, Debug)]
pub struct SubHopf {
    parent: Arc<HopfAlgebra>,
    space: Subspace,
    flags: SubalgebraFlags,
    normal: bool,
    induced: Arc<HopfAlgebra>,
}

impl PartialEq for SubHopf {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space
    }
}

impl SubHopf {
    /// Wrap a subspace, verifying it is a Hopf subalgebra; computes the
    /// induced structure constants and the normality flag.
    pub fn new(parent: &Arc<HopfAlgebra>, space: Subspace) -> Result<SubHopf> {
        if space.ambient_dim() != parent.dim() {
            return Err(Error::AmbientMismatch(space.ambient_dim(), parent.dim()));
        }
        let flags = subalgebra_flags(parent, &space);
        if !flags.is_hopf_subalgebra() {
            return Err(Error::NotHopfSubalgebra(format!(
                "unit {}, product-closed {}, subcoalgebra {}, antipode-stable {}",
                flags.contains_unit,
                flags.is_subalgebra,
                flags.is_subcoalgebra,
                flags.is_antipode_stable
            )));
        }
        let induced = Arc::new(induced_structure(parent, &space)?);
        let normal = is_normal(parent, &space);
        Ok(SubHopf {
            parent: parent.clone(),
            space,
            flags,
            normal,
            induced,
        })
    }

    /// The trivial Hopf subalgebra k·1.
    pub fn trivial(parent: &Arc<HopfAlgebra>) -> SubHopf {
        SubHopf::new(parent, Subspace::line(parent.unit_vec()))
            .expect("k·1 is a Hopf subalgebra of a valid Hopf algebra")
    }

    /// H as a Hopf subalgebra of itself.
    pub fn full(parent: &Arc<HopfAlgebra>) -> SubHopf {
        SubHopf::new(parent, Subspace::full(parent.dim()))
            .expect("H is a Hopf subalgebra of itself")
    }

    pub fn parent(&self) -> &Arc<HopfAlgebra> {
        &self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn flags(&self) -> SubalgebraFlags {
        self.flags
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    /// Structure constants in the RREF basis of the subspace.
    pub fn induced(&self) -> &Arc<HopfAlgebra> {
        &self.induced
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 1
    }

    pub fn is_full(&self) -> bool {
        self.space.is_full()
    }

    /// Induced-basis coordinates → parent coordinates.
    pub fn embed_vec(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.space.embed(coords)
    }

    /// Parent coordinates → induced-basis coordinates, if the vector lies in
    /// the subspace.
    pub fn restrict_vec(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.space.coordinates(v)
    }

    /// The idempotent integral of the induced Hopf algebra, in parent
    /// coordinates.
    pub fn integral_in_parent(&self) -> Result<Element> {
        let lambda = self.induced.integral()?;
        Ok(Element(self.embed_vec(&lambda)))
    }
}

/// Deterministic ordering of subspaces: dimension, then RREF entries.
pub fn subspace_order(a: &Subspace, b: &Subspace) -> std::cmp::Ordering {
    a.dim().cmp(&b.dim()).then_with(|| {
        for (ra, rb) in a.basis_rows().iter().zip(b.basis_rows().iter()) {
            for (x, y) in ra.iter().zip(rb.iter()) {
                let o = x.cmp(y);
                if o != std::cmp::Ordering::Equal {
                    return o;
                }
            }
        }
        std::cmp::Ordering::Equal
    })
}

// ---------------------------------------------------------------------------
// Flags and normality
// ---------------------------------------------------------------------------

/// Exhaustive closure flags for a subspace: unit membership, product
/// closure, Δ(V) ⊆ V⊗V, and S(V) ⊆ V.
pub fn subalgebra_flags(h: &HopfAlgebra, v: &Subspace) -> SubalgebraFlags {
    let rows = v.basis_rows();
    let contains_unit = v.contains_vec(h.unit_vec());
    let mut is_subalgebra = true;
    'outer: for a in &rows {
        for b in &rows {
            if !v.contains_vec(&h.mul_vec(a, b)) {
                is_subalgebra = false;
                break 'outer;
            }
        }
    }
    let is_subcoalgebra = rows
        .iter()
        .all(|r| tensor_square_coords(v, &h.comult_of(r)).is_some());
    let is_antipode_stable = rows.iter().all(|r| v.contains_vec(&h.antipode_of(r)));
    SubalgebraFlags {
        contains_unit,
        is_subalgebra,
        is_subcoalgebra,
        is_antipode_stable,
    }
}

/// Normality of a Hopf subalgebra: adjoint stability `h₁VS(h₂) ⊆ V` and
/// `S(h₁)Vh₂ ⊆ V` on all basis pairs, cross-validated against the ideal
/// equality `HV⁺ = V⁺H`. Returns false for subspaces that are not Hopf
/// subalgebras.
pub fn is_normal(h: &HopfAlgebra, v: &Subspace) -> bool {
    if !subalgebra_flags(h, v).is_hopf_subalgebra() {
        return false;
    }
    let rows = v.basis_rows();
    let mut adjoint_ok = true;
    'outer: for i in 0..h.dim() {
        for r in &rows {
            if !v.contains_vec(&h.adjoint_left_basis(i, r))
                || !v.contains_vec(&h.adjoint_right_basis(i, r))
            {
                adjoint_ok = false;
                break 'outer;
            }
        }
    }
    // Independent characterization via the augmentation ideal.
    let plus = augmentation_ideal(h, v);
    let left = one_sided_product(h, &Subspace::full(h.dim()), &plus);
    let right = one_sided_product(h, &plus, &Subspace::full(h.dim()));
    let ideal_ok = left == right;
    assert_eq!(
        adjoint_ok, ideal_ok,
        "normality characterizations disagree; the ambient input is not a valid Hopf algebra"
    );
    adjoint_ok
}

/// V ∩ ker ε.
pub fn augmentation_ideal(h: &HopfAlgebra, v: &Subspace) -> Subspace {
    let eps = Matrix::row_vector(h.counit_vec().to_vec());
    let ker = Subspace::from_vectors(h.dim(), &eps.kernel_basis());
    v.intersect(&ker)
}

/// Span of all pairwise products a·b for a in A, b in B.
pub fn one_sided_product(h: &HopfAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut rows = Vec::with_capacity(a.dim() * b.dim());
    for x in a.basis_rows() {
        for y in b.basis_rows() {
            rows.push(h.mul_vec(&x, &y));
        }
    }
    Subspace::from_vectors(h.dim(), &rows)
}

/// The product span A·L with a product-closure flag.
#[derive(Clone, Debug)]
pub struct ProductSpan {
    pub span: Subspace,
    pub product_closed: bool,
}

/// Raw span of pairwise products, with a flag reporting whether the span is
/// closed under multiplication.
pub fn product_span(h: &HopfAlgebra, a: &Subspace, l: &Subspace) -> ProductSpan {
    let span = one_sided_product(h, a, l);
    let rows = span.basis_rows();
    let product_closed = rows
        .iter()
        .all(|x| rows.iter().all(|y| span.contains_vec(&h.mul_vec(x, y))));
    ProductSpan {
        span,
        product_closed,
    }
}

/// Product of two Hopf subalgebras. When `a` is normal this verifies
/// AL = LA and that the span is again a Hopf subalgebra.
pub fn product_subalgebra(h: &HopfAlgebra, a: &SubHopf, l: &SubHopf) -> Result<ProductSpan> {
    let al = product_span(h, a.space(), l.space());
    if a.is_normal() {
        let la = one_sided_product(h, l.space(), a.space());
        if la != al.span {
            return Err(Error::Structure(
                "AL != LA although A is normal; invalid ambient input".into(),
            ));
        }
        if !subalgebra_flags(h, &al.span).is_hopf_subalgebra() {
            return Err(Error::Structure(
                "AL is not a Hopf subalgebra although A is normal".into(),
            ));
        }
    }
    Ok(al)
}

// ---------------------------------------------------------------------------
// Closure operators
// ---------------------------------------------------------------------------

/// Smallest subcoalgebra containing `v`: the span of all middle slices
/// `(f ⊗ id ⊗ g)(Δ²x)`, iterated to a fixpoint and verified to satisfy
/// Δ(C) ⊆ C ⊗ C.
pub fn coalgebra_closure(h: &HopfAlgebra, v: &Subspace) -> Subspace {
    let n = h.dim();
    let mut current = v.clone();
    loop {
        let mut rows = current.basis_rows();
        for r in current.basis_rows() {
            // Δ²r entries (a, b, k): outer pair (a, k), middle index b.
            let mut slices: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
            for ((j, k), c) in h.comult_of(&r) {
                for (a, b, d) in h.comult_basis(j) {
                    let slice = slices
                        .entry((*a, k))
                        .or_insert_with(|| vecops::zero(n));
                    slice[*b] += &(&c * d);
                }
            }
            rows.extend(slices.into_values());
        }
        let next = Subspace::from_vectors(n, &rows);
        if next == current {
            break;
        }
        current = next;
    }
    // For a coassociative input the fixpoint is already a subcoalgebra; for
    // defective inputs keep absorbing one-sided slices until it is.
    while tensor_closure_defect(h, &current).is_some() {
        let mut rows = current.basis_rows();
        for r in current.basis_rows() {
            let mut left: BTreeMap<usize, Vec<Scalar>> = BTreeMap::new();
            let mut right: BTreeMap<usize, Vec<Scalar>> = BTreeMap::new();
            for ((j, k), c) in h.comult_of(&r) {
                left.entry(j).or_insert_with(|| vecops::zero(n))[k] += &c;
                right.entry(k).or_insert_with(|| vecops::zero(n))[j] += &c;
            }
            rows.extend(left.into_values());
            rows.extend(right.into_values());
        }
        let next = Subspace::from_vectors(n, &rows);
        if next == current {
            break;
        }
        current = next;
    }
    current
}

fn tensor_closure_defect(h: &HopfAlgebra, v: &Subspace) -> Option<usize> {
    (0..v.dim()).find(|&i| {
        tensor_square_coords(v, &h.comult_of(&v.basis().row_to_vec(i))).is_none()
    })
}

/// Smallest unital subalgebra containing `v`.
pub fn algebra_closure(h: &HopfAlgebra, v: &Subspace) -> Subspace {
    let mut rows = v.basis_rows();
    rows.push(h.unit_vec().to_vec());
    let mut current = Subspace::from_vectors(h.dim(), &rows);
    loop {
        let basis = current.basis_rows();
        let mut rows = basis.clone();
        for x in &basis {
            for y in &basis {
                let p = h.mul_vec(x, y);
                if !current.contains_vec(&p) {
                    rows.push(p);
                }
            }
        }
        let next = Subspace::from_vectors(h.dim(), &rows);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Smallest Hopf subalgebra containing `v`: fixpoint of the coalgebra step,
/// then the algebra step, then the antipode step.
pub fn hopf_closure(h: &HopfAlgebra, v: &Subspace) -> Subspace {
    let mut current = v.clone();
    loop {
        let mut next = coalgebra_closure(h, &current);
        next = algebra_closure(h, &next);
        let mut rows = next.basis_rows();
        for r in next.basis_rows() {
            rows.push(h.antipode_of(&r));
        }
        let next = Subspace::from_vectors(h.dim(), &rows);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Smallest normal Hopf subalgebra containing `v`: the Hopf closure
/// interleaved with closing under both two-sided adjoint actions.
pub fn normal_closure(h: &HopfAlgebra, v: &Subspace) -> Subspace {
    let mut current = v.clone();
    loop {
        let next = hopf_closure(h, &current);
        let mut rows = next.basis_rows();
        for r in next.basis_rows() {
            for i in 0..h.dim() {
                let l = h.adjoint_left_basis(i, &r);
                if !next.contains_vec(&l) {
                    rows.push(l);
                }
                let rr = h.adjoint_right_basis(i, &r);
                if !next.contains_vec(&rr) {
                    rows.push(rr);
                }
            }
        }
        let next = Subspace::from_vectors(h.dim(), &rows);
        if next == current {
            return current;
        }
        current = next;
    }
}

// ---------------------------------------------------------------------------
// Induced structure and tensor-square membership
// ---------------------------------------------------------------------------

/// Coordinates of a tensor-square element in the basis `{r_j ⊗ r_k}` of
/// V ⊗ V, or `None` if it lies outside. Because the rows are RREF, the
/// coefficient on `r_j ⊗ r_k` can be read off at the pivot pair.
pub fn tensor_square_coords(
    v: &Subspace,
    t: &BTreeMap<(usize, usize), Scalar>,
) -> Option<Vec<((usize, usize), Scalar)>> {
    let pivots = v.pivot_cols();
    let d = v.dim();
    let mut coords = Vec::new();
    for j in 0..d {
        for k in 0..d {
            if let Some(c) = t.get(&(pivots[j], pivots[k])) {
                if !c.is_zero() {
                    coords.push(((j, k), c.clone()));
                }
            }
        }
    }
    // Residual check: t − Σ c·(r_j ⊗ r_k) must vanish.
    let mut residual = t.clone();
    for ((j, k), c) in &coords {
        let rj = v.basis().row(*j);
        let rk = v.basis().row(*k);
        for (a, ra) in rj.iter().enumerate() {
            if ra.is_zero() {
                continue;
            }
            for (b, rb) in rk.iter().enumerate() {
                if rb.is_zero() {
                    continue;
                }
                let sub = &(c * ra) * rb;
                let slot = residual.entry((a, b)).or_insert_with(Scalar::zero);
                *slot -= sub;
            }
        }
    }
    residual
        .values()
        .all(Scalar::is_zero)
        .then_some(coords)
}

/// Structure constants of a Hopf subalgebra in the RREF basis of its space.
pub fn induced_structure(h: &HopfAlgebra, space: &Subspace) -> Result<HopfAlgebra> {
    let d = space.dim();
    let rows = space.basis_rows();
    let unit = space
        .coordinates(h.unit_vec())
        .ok_or_else(|| Error::NotHopfSubalgebra("unit is not contained".into()))?;
    let mut mult_entries = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let p = h.mul_vec(&rows[i], &rows[j]);
            let coords = space
                .coordinates(&p)
                .ok_or_else(|| Error::NotHopfSubalgebra("not closed under products".into()))?;
            for (k, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    mult_entries.push((i, j, k, c));
                }
            }
        }
    }
    let mut comult_entries = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let coords = tensor_square_coords(space, &h.comult_of(r))
            .ok_or_else(|| Error::NotHopfSubalgebra("not a subcoalgebra".into()))?;
        for ((j, k), c) in coords {
            comult_entries.push((i, j, k, c));
        }
    }
    let counit: Vec<Scalar> = rows.iter().map(|r| h.counit_of(r)).collect();
    let mut antipode = Matrix::zeros(d, d);
    for (i, r) in rows.iter().enumerate() {
        let coords = space
            .coordinates(&h.antipode_of(r))
            .ok_or_else(|| Error::NotHopfSubalgebra("not antipode-stable".into()))?;
        for (k, c) in coords.into_iter().enumerate() {
            antipode[(k, i)] = c;
        }
    }
    HopfAlgebra::from_tensors(d, mult_entries, unit, comult_entries, counit, antipode)
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

/// The quotient Hopf algebra H//A = H/HA⁺ for a normal Hopf subalgebra A,
/// together with the projection as a verified Hopf algebra map.
///
/// The quotient basis is the set of non-pivot coordinates of the RREF of the
/// ideal HA⁺, which fixes a deterministic section of the projection.
pub fn quotient(
    h: &Arc<HopfAlgebra>,
    a: &SubHopf,
) -> Result<(Arc<HopfAlgebra>, HopfMorphism)> {
    if !a.is_normal() {
        return Err(Error::NotNormal);
    }
    let n = h.dim();
    let plus = augmentation_ideal(h, a.space());
    let ideal = one_sided_product(h, &Subspace::full(n), &plus);
    let other = one_sided_product(h, &plus, &Subspace::full(n));
    if ideal != other {
        return Err(Error::Structure("HA⁺ != A⁺H for a normal A".into()));
    }
    // Hopf ideal descent checks: ε(I) = 0, S(I) ⊆ I.
    for r in ideal.basis_rows() {
        if !h.counit_of(&r).is_zero() {
            return Err(Error::Structure("counit does not vanish on HA⁺".into()));
        }
        if !ideal.contains_vec(&h.antipode_of(&r)) {
            return Err(Error::Structure("antipode does not preserve HA⁺".into()));
        }
    }
    let pivots = ideal.pivot_cols();
    let section: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let q = section.len();
    if q * a.dim() != n {
        return Err(Error::Structure(format!(
            "quotient dimension {q} does not satisfy |H| = |A|·|H//A|"
        )));
    }
    // Projection matrix: reduce each basis vector modulo the ideal and keep
    // the non-pivot coordinates.
    let mut proj = Matrix::zeros(q, n);
    for j in 0..n {
        let reduced = ideal.reduce(&vecops::basis(n, j));
        for (qi, &c) in section.iter().enumerate() {
            proj[(qi, j)] = reduced[c].clone();
        }
    }
    let proj_cols: Vec<Vec<Scalar>> = (0..n).map(|j| proj.col_to_vec(j)).collect();
    // Δ(I) ⊆ I⊗H + H⊗I, tested as (π⊗π)(Δr) = 0; the two conditions agree
    // because I⊗H + H⊗I is exactly the kernel of π⊗π.
    for r in ideal.basis_rows() {
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for ((j, k), c) in h.comult_of(&r) {
            for (x, cx) in proj_cols[j].iter().enumerate() {
                if cx.is_zero() {
                    continue;
                }
                for (y, cy) in proj_cols[k].iter().enumerate() {
                    if cy.is_zero() {
                        continue;
                    }
                    *acc.entry((x, y)).or_insert_with(Scalar::zero) += &(&c * cx) * cy;
                }
            }
        }
        if !acc.values().all(Scalar::is_zero) {
            return Err(Error::Structure("Δ(HA⁺) ⊄ I⊗H + H⊗I".into()));
        }
    }
    // Structure constants through the section e_c ↦ class of e_c.
    let mut mult_entries = Vec::new();
    for (x, &cx) in section.iter().enumerate() {
        for (y, &cy) in section.iter().enumerate() {
            let mut acc = vecops::zero(q);
            for (k, c) in h.basis_product(cx, cy) {
                vecops::add_scaled(&mut acc, &proj_cols[*k], c);
            }
            for (k, c) in acc.into_iter().enumerate() {
                if !c.is_zero() {
                    mult_entries.push((x, y, k, c));
                }
            }
        }
    }
    let mut comult_entries = Vec::new();
    for (x, &cx) in section.iter().enumerate() {
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (j, k, c) in h.comult_basis(cx) {
            for (a1, ca) in proj_cols[*j].iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                for (b1, cb) in proj_cols[*k].iter().enumerate() {
                    if cb.is_zero() {
                        continue;
                    }
                    let v = &(c * ca) * cb;
                    *acc.entry((a1, b1)).or_insert_with(Scalar::zero) += v;
                }
            }
        }
        for ((j, k), c) in acc {
            if !c.is_zero() {
                comult_entries.push((x, j, k, c));
            }
        }
    }
    let counit: Vec<Scalar> = section.iter().map(|&c| h.counit_value(c).clone()).collect();
    let unit_q = proj.apply(h.unit_vec());
    let mut antipode = Matrix::zeros(q, q);
    for (x, &cx) in section.iter().enumerate() {
        let img = proj.apply(&h.antipode_of(&vecops::basis(n, cx)));
        for (k, c) in img.into_iter().enumerate() {
            antipode[(k, x)] = c;
        }
    }
    let quotient = Arc::new(HopfAlgebra::from_tensors(
        q,
        mult_entries,
        unit_q,
        comult_entries,
        counit,
        antipode,
    )?);
    let report = quotient.verify_axioms();
    if !report.all_pass() {
        return Err(Error::Structure(format!(
            "quotient fails axiom: {}",
            report.first_failure().unwrap().axiom.name()
        )));
    }
    let projection = HopfMorphism::verified(h.clone(), quotient.clone(), proj);
    if !projection.is_hopf_map() {
        return Err(Error::Structure(
            "quotient projection is not a Hopf algebra map".into(),
        ));
    }
    // Kernel is exactly the ideal: dimension count plus containment.
    if projection.matrix.rank() != q {
        return Err(Error::Structure("projection is not surjective".into()));
    }
    for r in ideal.basis_rows() {
        if !vecops::is_zero(&projection.apply(&r)) {
            return Err(Error::Structure("ideal does not map to zero".into()));
        }
    }
    Ok((quotient, projection))
}

/// The image of the dualized quotient projection inside H*, computed as the
/// solution space of `f(ha) = f(h)ε(a)` over all basis pairs. When `k` is
/// normal this is cross-checked against the row space of the projection and
/// verified normal in the dual.
pub fn quotient_dual_embed(h: &Arc<HopfAlgebra>, k: &SubHopf) -> Result<Subspace> {
    let n = h.dim();
    let mut constraints = Vec::new();
    for i in 0..n {
        for a in k.space().basis_rows() {
            // f(e_i · a) − ε(a)·f(e_i) = 0.
            let mut row = h.mul_vec(&vecops::basis(n, i), &a);
            row[i] -= h.counit_of(&a);
            if !vecops::is_zero(&row) {
                constraints.push(row);
            }
        }
    }
    let solution = if constraints.is_empty() {
        Subspace::full(n)
    } else {
        Subspace::from_vectors(n, &Matrix::from_rows(constraints).kernel_basis())
    };
    if k.is_normal() {
        let (_, projection) = quotient(h, k)?;
        let image = Subspace::from_span(&projection.matrix);
        if image != solution {
            return Err(Error::Structure(
                "dual-quotient solution space differs from the projection image".into(),
            ));
        }
        let dual = Arc::new(h.dual());
        if !is_normal(&dual, &solution) {
            return Err(Error::Structure(
                "dualized quotient is not normal in H*".into(),
            ));
        }
    }
    Ok(solution)
}
