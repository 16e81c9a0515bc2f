//! Factorizations H = A·L, the dimension formula, and the isomorphisms they
//! induce: tensor products for normal pairs, smash products for one normal
//! factor, and the complement-to-quotient map.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{vecops, Matrix, Subspace};
use crate::hopf::{HopfAlgebra, HopfMorphism};
use crate::products::{multiplication_map, smash};
use crate::report::Report;
use crate::subobjects::{
    augmentation_ideal, one_sided_product, product_span, quotient, SubHopf,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorizationKind {
    /// Neither factor known normal.
    General,
    /// The left factor A is normal.
    HalfNormal,
    /// Both factors normal.
    Normal,
}

impl FactorizationKind {
    pub fn name(&self) -> &'static str {
        match self {
            FactorizationKind::General => "general",
            FactorizationKind::HalfNormal => "half_normal",
            FactorizationKind::Normal => "normal",
        }
    }
}

/// A verified factorization: the multiplication map A ⊗ L → H is bijective
/// (and then A ∩ L = k automatically; this is still checked).
#[derive(Clone, Debug)]
pub struct Factorization {
    pub h: Arc<HopfAlgebra>,
    pub a: SubHopf,
    pub l: SubHopf,
    /// The multiplication map on the Kronecker basis.
    pub map: Matrix,
    /// Its exact inverse.
    pub inverse: Matrix,
    pub kind: FactorizationKind,
}

/// Build and classify a factorization, or report why the pair is not one.
pub fn is_factorization(h: &Arc<HopfAlgebra>, a: &SubHopf, l: &SubHopf) -> Result<Factorization> {
    let n = h.dim();
    if a.dim() * l.dim() != n {
        return Err(Error::NotAFactorization(format!(
            "|A|·|L| = {}·{} ≠ {n} = |H|",
            a.dim(),
            l.dim()
        )));
    }
    let map = multiplication_map(h, a, l);
    let inverse = map
        .inverse()
        .ok_or_else(|| Error::NotAFactorization("multiplication map is singular".into()))?;
    let meet = a.space().intersect(l.space());
    if meet.dim() != 1 || !meet.contains_vec(h.unit_vec()) {
        return Err(Error::Structure(format!(
            "bijective multiplication map but A ∩ L has dimension {}",
            meet.dim()
        )));
    }
    let kind = match (a.is_normal(), l.is_normal()) {
        (true, true) => FactorizationKind::Normal,
        (true, false) => FactorizationKind::HalfNormal,
        _ => FactorizationKind::General,
    };
    Ok(Factorization {
        h: h.clone(),
        a: a.clone(),
        l: l.clone(),
        map,
        inverse,
        kind,
    })
}

/// The dimension formula |LA| = |L|·|A| / |L ∩ A|, together with its
/// coideal-quotient shadow dim(LA/(LA·A⁺)) = |L| / |L ∩ A|.
pub fn check_dimension_formula(
    h: &Arc<HopfAlgebra>,
    a: &SubHopf,
    l: &SubHopf,
) -> Result<Report> {
    if !h.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let mut report = Report::new("dimension formula");
    let la = one_sided_product(h, l.space(), a.space());
    let meet = l.space().intersect(a.space());
    let expected = l.dim() * a.dim() / meet.dim();
    report.record(
        "|LA| = |L||A|/|L∩A|",
        l.dim() * a.dim() % meet.dim() == 0 && la.dim() == expected,
        format!(
            "|LA| = {}, |L| = {}, |A| = {}, |L∩A| = {}",
            la.dim(),
            l.dim(),
            a.dim(),
            meet.dim()
        ),
    );
    // dim(LA/(LA·A⁺)) = |L|/|L∩A|: the coideal quotient of LA by A.
    let a_plus = augmentation_ideal(h, a.space());
    let ideal = one_sided_product(h, &la, &a_plus);
    let quotient_dim = la.dim() - ideal.dim();
    report.record(
        "dim(LA/(LA·A⁺)) = |L|/|L∩A|",
        l.dim() % meet.dim() == 0 && quotient_dim == l.dim() / meet.dim(),
        format!(
            "dim(LA/(LA·A⁺)) = {}, |L|/|L∩A| = {}/{}",
            quotient_dim,
            l.dim(),
            meet.dim()
        ),
    );
    Ok(report)
}

/// For two normal factors with A ∩ L = k and AL = H: the multiplication map
/// `tensor(A, L) → H` verified as a Hopf algebra isomorphism, plus the
/// elementwise commutation al = la it relies on.
pub fn normal_factor_iso(h: &Arc<HopfAlgebra>, a: &SubHopf, l: &SubHopf) -> Result<HopfMorphism> {
    if !a.is_normal() {
        return Err(Error::Precondition("A is not normal".into()));
    }
    if !l.is_normal() {
        return Err(Error::Precondition("L is not normal".into()));
    }
    let meet = a.space().intersect(l.space());
    if meet.dim() != 1 {
        return Err(Error::IntersectionNotTrivial(meet.dim()));
    }
    let al = product_span(h, a.space(), l.space());
    if !al.span.is_full() {
        return Err(Error::Precondition(format!(
            "AL has dimension {} < {} = |H|",
            al.span.dim(),
            h.dim()
        )));
    }
    if a.dim() * l.dim() != h.dim() {
        return Err(Error::Precondition(format!(
            "|A|·|L| = {}·{} ≠ {}",
            a.dim(),
            l.dim(),
            h.dim()
        )));
    }
    check_elementwise_commutation(h, a.space(), l.space())?;
    let tensor = Arc::new(a.induced().tensor(l.induced()));
    let map = multiplication_map(h, a, l);
    HopfMorphism::verified(tensor, h.clone(), map).require_isomorphism()
}

/// Elementwise commutation al = la on basis pairs.
pub fn check_elementwise_commutation(
    h: &HopfAlgebra,
    a: &Subspace,
    l: &Subspace,
) -> Result<()> {
    for (i, x) in a.basis_rows().iter().enumerate() {
        for (j, y) in l.basis_rows().iter().enumerate() {
            if h.mul_vec(x, y) != h.mul_vec(y, x) {
                return Err(Error::Structure(format!(
                    "basis elements a{i} and l{j} do not commute"
                )));
            }
        }
    }
    Ok(())
}

/// For semisimple H with A normal and A ∩ L = k: the smash product A # L
/// built from the adjoint action, with the multiplication map verified as a
/// Hopf algebra isomorphism onto the Hopf subalgebra AL.
pub fn smash_factor_iso(h: &Arc<HopfAlgebra>, a: &SubHopf, l: &SubHopf) -> Result<HopfMorphism> {
    if !h.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    if !a.is_normal() {
        return Err(Error::NotNormal);
    }
    let meet = a.space().intersect(l.space());
    if meet.dim() != 1 {
        return Err(Error::IntersectionNotTrivial(meet.dim()));
    }
    let (p, q) = (a.dim(), l.dim());
    // Adjoint action of L on A, expressed in the induced bases.
    let a_rows = a.space().basis_rows();
    let l_rows = l.space().basis_rows();
    let mut act = Matrix::zeros(p, q * p);
    for i in 0..q {
        for j in 0..p {
            let adj = h.adjoint_action(
                &crate::hopf::Element(l_rows[i].clone()),
                &crate::hopf::Element(a_rows[j].clone()),
            );
            let in_a = a.restrict_vec(&adj).ok_or_else(|| {
                Error::Structure("adjoint action leaves A although A is normal".into())
            })?;
            for (x, c) in in_a.into_iter().enumerate() {
                act[(x, i * p + j)] = c;
            }
        }
    }
    let smash_product = Arc::new(smash(a.induced().clone(), l.induced().clone(), &act)?);
    // Target: the Hopf subalgebra AL; Eq 3.3 makes dim AL = |A||L|, so the
    // multiplication map is square and injectivity follows from surjectivity.
    let al = product_span(h, a.space(), l.space());
    if al.span.dim() != p * q {
        return Err(Error::Structure(format!(
            "dim AL = {} but |A||L|/|A∩L| = {}",
            al.span.dim(),
            p * q
        )));
    }
    let al_sub = SubHopf::new(h, al.span)?;
    let mut map = Matrix::zeros(p * q, p * q);
    for i in 0..p {
        for j in 0..q {
            let prod = h.mul_vec(&a_rows[i], &l_rows[j]);
            let coords = al_sub
                .restrict_vec(&prod)
                .expect("products of A and L lie in AL");
            for (r, c) in coords.into_iter().enumerate() {
                map[(r, i * q + j)] = c;
            }
        }
    }
    HopfMorphism::verified(smash_product, al_sub.induced().clone(), map).require_isomorphism()
}

/// For a factorization (A, L) with A normal: the map L → H//A, l ↦ l̄,
/// verified as a bijective Hopf algebra map.
pub fn complement_quotient_iso(
    h: &Arc<HopfAlgebra>,
    a: &SubHopf,
    l: &SubHopf,
) -> Result<HopfMorphism> {
    let f = is_factorization(h, a, l)?;
    if f.kind == FactorizationKind::General {
        return Err(Error::NotNormal);
    }
    let (quot, projection) = quotient(h, a)?;
    let mut map = Matrix::zeros(quot.dim(), l.dim());
    for (j, row) in l.space().basis_rows().iter().enumerate() {
        for (r, c) in projection.apply(row).into_iter().enumerate() {
            map[(r, j)] = c;
        }
    }
    HopfMorphism::verified(l.induced().clone(), quot, map).require_isomorphism()
}

// ---------------------------------------------------------------------------
// Projection pairs
// ---------------------------------------------------------------------------

/// The two projections attached to a normal factorization H ≅ A ⊗ L:
/// π₁(a⊗l) = ε(l)a and π₂(a⊗l) = ε(a)l, as endomorphisms of H.
#[derive(Clone, Debug)]
pub struct ProjectionPair {
    pub h: Arc<HopfAlgebra>,
    pub pi1: HopfMorphism,
    pub pi2: HopfMorphism,
}

/// Exhaustive verification of the five projection-pair properties.
pub fn projection_properties(h: &HopfAlgebra, pi1: &Matrix, pi2: &Matrix) -> Report {
    let mut report = Report::new("projection pair properties");
    let n = h.dim();

    let hopf_maps = {
        let arc = Arc::new(h.clone());
        let m1 = HopfMorphism::verified(arc.clone(), arc.clone(), pi1.clone());
        let m2 = HopfMorphism::verified(arc.clone(), arc, pi2.clone());
        m1.is_hopf_map() && m2.is_hopf_map()
    };
    report.record("π₁, π₂ are Hopf algebra maps", hopf_maps, "flag verification");

    let mut normal = true;
    let mut witness = String::new();
    'outer: for i in 0..n {
        for j in 0..n {
            let basis_j = vecops::basis(n, j);
            for (name, p) in [("π₁", pi1), ("π₂", pi2)] {
                let lhs = p.apply(&h.adjoint_left_basis(i, &basis_j));
                let rhs = h.adjoint_left_basis(i, &p.apply(&basis_j));
                if lhs != rhs {
                    normal = false;
                    witness = format!("{name} at (h{i}, a{j})");
                    break 'outer;
                }
            }
        }
    }
    report.record("π₁, π₂ are normal endomorphisms", normal, witness);

    report.record(
        "π_i² = π_i under composition",
        pi1.mul(pi1) == *pi1 && pi2.mul(pi2) == *pi2,
        "matrix idempotence",
    );

    let id = Matrix::identity(n);
    report.record(
        "π₂ ⋆ π₁ = π₁ ⋆ π₂ = id under convolution",
        h.convolve(pi2, pi1) == id && h.convolve(pi1, pi2) == id,
        "convolution identity",
    );

    let ue = h.unit_counit_matrix();
    report.record(
        "π₁ ∘ π₂ = π₂ ∘ π₁ = u∘ε",
        pi1.mul(pi2) == ue && pi2.mul(pi1) == ue,
        "composition collapses to u∘ε",
    );

    report
}

/// Transport π₁(a⊗l) = ε(l)a and π₂(a⊗l) = ε(a)l along a normal
/// factorization, verifying all five properties exactly.
pub fn projections_from_factorization(f: &Factorization) -> Result<ProjectionPair> {
    if f.kind != FactorizationKind::Normal {
        return Err(Error::WrongKind {
            required: "normal".into(),
            found: f.kind.name().into(),
        });
    }
    let h = &f.h;
    let n = h.dim();
    let (p, q) = (f.a.dim(), f.l.dim());
    let a_rows = f.a.space().basis_rows();
    let l_rows = f.l.space().basis_rows();
    let mut pi1 = Matrix::zeros(n, n);
    let mut pi2 = Matrix::zeros(n, n);
    for col in 0..n {
        let coords = f.inverse.col_to_vec(col);
        let mut img1 = vecops::zero(n);
        let mut img2 = vecops::zero(n);
        for i in 0..p {
            for j in 0..q {
                let c = &coords[i * q + j];
                if c.is_zero() {
                    continue;
                }
                let eps_l = f.l.induced().counit_value(j);
                if !eps_l.is_zero() {
                    vecops::add_scaled(&mut img1, &a_rows[i], &(c * eps_l));
                }
                let eps_a = f.a.induced().counit_value(i);
                if !eps_a.is_zero() {
                    vecops::add_scaled(&mut img2, &l_rows[j], &(c * eps_a));
                }
            }
        }
        for (r, v) in img1.into_iter().enumerate() {
            pi1[(r, col)] = v;
        }
        for (r, v) in img2.into_iter().enumerate() {
            pi2[(r, col)] = v;
        }
    }
    let report = projection_properties(h, &pi1, &pi2);
    if !report.passed() {
        return Err(Error::Structure(format!(
            "projection property failed: {}",
            report.first_failure().unwrap().name
        )));
    }
    let m1 = HopfMorphism::verified(h.clone(), h.clone(), pi1);
    let m2 = HopfMorphism::verified(h.clone(), h.clone(), pi2);
    Ok(ProjectionPair {
        h: h.clone(),
        pi1: m1,
        pi2: m2,
    })
}

/// Recover the normal factorization from a verified projection pair:
/// A = π₁(H), L = π₂(H).
pub fn factorization_from_projections(
    h: &Arc<HopfAlgebra>,
    pi1: &Matrix,
    pi2: &Matrix,
) -> Result<Factorization> {
    let report = projection_properties(h, pi1, pi2);
    if !report.passed() {
        return Err(Error::InvalidProjections(
            report.first_failure().unwrap().name.clone(),
        ));
    }
    let a_space = Subspace::from_span(&pi1.transpose());
    let l_space = Subspace::from_span(&pi2.transpose());
    let a = SubHopf::new(h, a_space)?;
    let l = SubHopf::new(h, l_space)?;
    if !a.is_normal() || !l.is_normal() {
        return Err(Error::InvalidProjections(
            "projection images are not normal Hopf subalgebras".into(),
        ));
    }
    // H = AL via the convolution identity h = π₁(h₁)π₂(h₂); the span check
    // is carried out explicitly as well.
    let al = one_sided_product(h, a.space(), l.space());
    if !al.is_full() {
        return Err(Error::InvalidProjections("π₁(H)·π₂(H) ≠ H".into()));
    }
    let f = is_factorization(h, &a, &l)?;
    if f.kind != FactorizationKind::Normal {
        return Err(Error::InvalidProjections(
            "recovered factorization is not normal".into(),
        ));
    }
    Ok(f)
}
