//! Socle, complete reducibility, Krull–Schmidt–Remak decomposition and its
//! uniqueness, and locating normal Hopf subalgebras inside a decomposition.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar, Subspace};
use crate::groups::FiniteGroup;
use crate::hopf::{HopfAlgebra, HopfMorphism};
use crate::report::Report;
use crate::subobjects::{one_sided_product, SubHopf};

use super::factorization::check_elementwise_commutation;
use super::lattice::{enumerate_normal_lattice, minimal_normals, NormalLattice};

/// An internal tensor-product decomposition: pairwise independent normal
/// factors together with the verified isomorphism from the iterated tensor
/// product onto the ambient algebra.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub ambient: Arc<HopfAlgebra>,
    pub factors: Vec<SubHopf>,
    /// Iterated tensor product of the factors → ambient (left-associated).
    pub iso: HopfMorphism,
}

/// Outcome of a Krull–Schmidt–Remak decomposition attempt.
#[derive(Clone, Debug)]
pub enum KsrOutcome {
    Decomposed(Decomposition),
    NotCompletelyReducible(KsrObstruction),
}

/// Witness for a failed decomposition.
#[derive(Clone, Debug)]
pub enum KsrObstruction {
    /// The socle is a proper subalgebra: the product closure of the minimal
    /// normals stalls below H.
    SocleProper { socle: SubHopf },
    /// A factor is not simple.
    NonSimpleFactor { index: usize, factor: SubHopf },
}

/// Verify the internal tensor-product conditions for a family of normal
/// Hopf subalgebras and build the iterated multiplication isomorphism.
pub fn decomposition_from_factors(
    ambient: &Arc<HopfAlgebra>,
    factors: Vec<SubHopf>,
) -> Result<Decomposition> {
    let n = ambient.dim();
    for (i, f) in factors.iter().enumerate() {
        if !f.is_normal() {
            return Err(Error::Precondition(format!("factor {i} is not normal")));
        }
    }
    // Independence: K_μ ∩ ⟨K_λ | λ ≠ μ⟩ = k.
    for mu in 0..factors.len() {
        let mut others = Subspace::line(ambient.unit_vec());
        for (lambda, f) in factors.iter().enumerate() {
            if lambda != mu {
                others = one_sided_product(ambient, &others, f.space());
            }
        }
        let meet = factors[mu].space().intersect(&others);
        if meet.dim() != 1 {
            return Err(Error::IntersectionNotTrivial(meet.dim()));
        }
    }
    // Generation: the product of all factors is the ambient algebra.
    let mut generated = Subspace::line(ambient.unit_vec());
    for f in &factors {
        generated = one_sided_product(ambient, &generated, f.space());
    }
    if !generated.is_full() {
        return Err(Error::Precondition(format!(
            "factors generate a subalgebra of dimension {} < {n}",
            generated.dim()
        )));
    }
    // Iterated tensor product and the multiplication map onto the ambient.
    let mut tensor = HopfAlgebra::unit_algebra();
    let mut images: Vec<Vec<Scalar>> = vec![ambient.unit_vec().to_vec()];
    for f in &factors {
        tensor = tensor.tensor(f.induced());
        let rows = f.space().basis_rows();
        let mut next = Vec::with_capacity(images.len() * rows.len());
        for img in &images {
            for row in &rows {
                next.push(ambient.mul_vec(img, row));
            }
        }
        images = next;
    }
    let mut map = Matrix::zeros(n, images.len());
    for (col, img) in images.iter().enumerate() {
        for (r, c) in img.iter().enumerate() {
            map[(r, col)] = c.clone();
        }
    }
    let iso = HopfMorphism::verified(Arc::new(tensor), ambient.clone(), map)
        .require_isomorphism()?;
    Ok(Decomposition {
        ambient: ambient.clone(),
        factors,
        iso,
    })
}

/// The socle: the Hopf subalgebra generated by all minimal normal Hopf
/// subalgebras, with its verified tensor decomposition into a subsequence of
/// them. The greedy pass follows a deterministic (dimension, then basis)
/// order; `reversed` flips it, which tests order independence.
pub fn socle_from_lattice(
    h: &Arc<HopfAlgebra>,
    lat: &NormalLattice,
    reversed: bool,
) -> Result<(SubHopf, Decomposition)> {
    let mut minimals = minimal_normals(lat);
    if reversed {
        minimals.reverse();
    }
    let mut acc = Subspace::line(h.unit_vec());
    let mut chosen: Vec<SubHopf> = Vec::new();
    for min in minimals {
        if acc.contains(min.space()) {
            continue;
        }
        let meet = acc.intersect(min.space());
        if meet.dim() != 1 {
            return Err(Error::Structure(
                "minimal normal meets the accumulated product nontrivially".into(),
            ));
        }
        check_elementwise_commutation(h, &acc, min.space())?;
        acc = one_sided_product(h, &acc, min.space());
        chosen.push(min);
    }
    let socle = SubHopf::new(h, acc)?;
    // Express the chosen factors inside the socle and decompose there.
    let inner = Arc::clone(socle.induced());
    let mut inner_factors = Vec::with_capacity(chosen.len());
    for f in chosen {
        let rows: Vec<Vec<Scalar>> = f
            .space()
            .basis_rows()
            .iter()
            .map(|r| {
                socle
                    .restrict_vec(r)
                    .expect("factors lie inside the socle")
            })
            .collect();
        let space = Subspace::from_vectors(inner.dim(), &rows);
        inner_factors.push(SubHopf::new(&inner, space)?);
    }
    let decomposition = decomposition_from_factors(&inner, inner_factors)?;
    Ok((socle, decomposition))
}

/// Socle with a freshly enumerated lattice.
pub fn socle(h: &Arc<HopfAlgebra>) -> Result<(SubHopf, Decomposition)> {
    let lat = enumerate_normal_lattice(h)?;
    socle_from_lattice(h, &lat, false)
}

/// Krull–Schmidt–Remak decomposition: succeeds iff the socle is all of H and
/// every factor is simple (its own lattice has exactly two elements).
pub fn ksr_decompose(h: &Arc<HopfAlgebra>) -> Result<KsrOutcome> {
    ksr_decompose_ordered(h, false)
}

/// KSR decomposition with control over the greedy minimal-normal order.
pub fn ksr_decompose_ordered(h: &Arc<HopfAlgebra>, reversed: bool) -> Result<KsrOutcome> {
    let lat = enumerate_normal_lattice(h)?;
    let (socle, decomposition) = socle_from_lattice(h, &lat, reversed)?;
    if !socle.is_full() {
        return Ok(KsrOutcome::NotCompletelyReducible(
            KsrObstruction::SocleProper { socle },
        ));
    }
    for (index, factor) in decomposition.factors.iter().enumerate() {
        let factor_lattice = enumerate_normal_lattice(factor.induced())?;
        if factor_lattice.len() != 2 {
            return Ok(KsrOutcome::NotCompletelyReducible(
                KsrObstruction::NonSimpleFactor {
                    index,
                    factor: factor.clone(),
                },
            ));
        }
    }
    Ok(KsrOutcome::Decomposed(decomposition))
}

// ---------------------------------------------------------------------------
// Hopf isomorphism search between small factors
// ---------------------------------------------------------------------------

/// Read a Hopf algebra with an all-grouplike basis back as a finite group.
pub fn as_group(h: &HopfAlgebra) -> Option<FiniteGroup> {
    if !h.has_grouplike_basis() {
        return None;
    }
    let n = h.dim();
    // The unit must itself be a basis vector.
    (0..n).find(|&u| {
        h.unit_vec()
            .iter()
            .enumerate()
            .all(|(i, c)| if i == u { c.is_one() } else { c.is_zero() })
    })?;
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            let prod = h.basis_product(i, j);
            if prod.len() != 1 || !prod[0].1.is_one() {
                return None;
            }
            table[i][j] = prod[0].0;
        }
    }
    FiniteGroup::new(table, None).ok()
}

fn element_order(g: &FiniteGroup, x: usize) -> usize {
    let mut acc = x;
    let mut ord = 1;
    while acc != g.identity() {
        acc = g.mul(acc, x);
        ord += 1;
    }
    ord
}

/// Backtracking group isomorphism search with product propagation.
pub fn group_iso(gx: &FiniteGroup, gy: &FiniteGroup) -> Option<Vec<usize>> {
    let n = gx.order();
    if n != gy.order() {
        return None;
    }
    let ox: Vec<usize> = (0..n).map(|i| element_order(gx, i)).collect();
    let oy: Vec<usize> = (0..n).map(|i| element_order(gy, i)).collect();
    let mut sx = ox.clone();
    let mut sy = oy.clone();
    sx.sort_unstable();
    sy.sort_unstable();
    if sx != sy {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[gx.identity()] = gy.identity();
    used[gy.identity()] = true;
    fn propagate(
        gx: &FiniteGroup,
        gy: &FiniteGroup,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        loop {
            let mut changed = false;
            let n = gx.order();
            for a in 0..n {
                if map[a] == usize::MAX {
                    continue;
                }
                for b in 0..n {
                    if map[b] == usize::MAX {
                        continue;
                    }
                    let c = gx.mul(a, b);
                    let img = gy.mul(map[a], map[b]);
                    if map[c] == usize::MAX {
                        if used[img] {
                            return false;
                        }
                        map[c] = img;
                        used[img] = true;
                        changed = true;
                    } else if map[c] != img {
                        return false;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }
    fn search(
        gx: &FiniteGroup,
        gy: &FiniteGroup,
        ox: &[usize],
        oy: &[usize],
        map: Vec<usize>,
        used: Vec<bool>,
    ) -> Option<Vec<usize>> {
        let mut map = map;
        let mut used = used;
        if !propagate(gx, gy, &mut map, &mut used) {
            return None;
        }
        let Some(next) = map.iter().position(|&m| m == usize::MAX) else {
            return Some(map);
        };
        for cand in 0..gy.order() {
            if used[cand] || oy[cand] != ox[next] {
                continue;
            }
            let mut m2 = map.clone();
            let mut u2 = used.clone();
            m2[next] = cand;
            u2[cand] = true;
            if let Some(found) = search(gx, gy, ox, oy, m2, u2) {
                return Some(found);
            }
        }
        None
    }
    search(gx, gy, &ox, &oy, map, used)
}

/// Search for a Hopf algebra isomorphism between two small factors.
///
/// Strategy: if both have grouplike bases, search for a group isomorphism by
/// backtracking over generator images; otherwise try the duals (whose
/// grouplike bases cover function algebras); otherwise give up. Every found
/// map is verified exactly before being returned.
pub fn hopf_iso_search(x: &Arc<HopfAlgebra>, y: &Arc<HopfAlgebra>) -> Result<HopfMorphism> {
    if x.dim() != y.dim() {
        return Err(Error::NoIsomorphismFound);
    }
    if let (Some(gx), Some(gy)) = (as_group(x), as_group(y)) {
        if let Some(perm) = group_iso(&gx, &gy) {
            let mut m = Matrix::zeros(y.dim(), x.dim());
            for (i, &img) in perm.iter().enumerate() {
                m[(img, i)] = Scalar::one();
            }
            return HopfMorphism::verified(x.clone(), y.clone(), m).require_isomorphism();
        }
        return Err(Error::NoIsomorphismFound);
    }
    let dx = Arc::new(x.dual());
    let dy = Arc::new(y.dual());
    if let (Some(gx), Some(gy)) = (as_group(&dy), as_group(&dx)) {
        // ψ : Y* → X* transposes to φ = ψ* : X → Y.
        if let Some(perm) = group_iso(&gx, &gy) {
            let mut psi = Matrix::zeros(x.dim(), y.dim());
            for (i, &img) in perm.iter().enumerate() {
                psi[(img, i)] = Scalar::one();
            }
            return HopfMorphism::verified(x.clone(), y.clone(), psi.transpose())
                .require_isomorphism();
        }
        return Err(Error::NoIsomorphismFound);
    }
    Err(Error::NoIsomorphismFound)
}

/// A verified factor matching between two decompositions of the same algebra.
#[derive(Clone, Debug)]
pub struct Matching {
    /// `permutation[i] = j` pairs factor i of the first decomposition with
    /// factor j of the second.
    pub permutation: Vec<usize>,
    /// The verified isomorphism for each pair, indexed like `permutation`.
    pub isos: Vec<HopfMorphism>,
}

/// Match the factors of two decompositions of the same H pairwise up to
/// Hopf algebra isomorphism.
pub fn ksr_uniqueness_check(d1: &Decomposition, d2: &Decomposition) -> Result<Matching> {
    if d1.ambient != d2.ambient {
        return Err(Error::SameAlgebraRequired);
    }
    if d1.factors.len() != d2.factors.len() {
        return Err(Error::Structure(
            "decompositions have different factor counts; falsifies uniqueness".into(),
        ));
    }
    let s = d1.factors.len();
    let mut candidates: Vec<Vec<(usize, HopfMorphism)>> = Vec::with_capacity(s);
    for f1 in &d1.factors {
        let mut row = Vec::new();
        for (j, f2) in d2.factors.iter().enumerate() {
            if f1.dim() != f2.dim() {
                continue;
            }
            if let Ok(iso) = hopf_iso_search(f1.induced(), f2.induced()) {
                row.push((j, iso));
            }
        }
        candidates.push(row);
    }
    fn assign(
        candidates: &[Vec<(usize, HopfMorphism)>],
        i: usize,
        chosen: &mut [Option<usize>],
        used: &mut [bool],
    ) -> bool {
        if i == candidates.len() {
            return true;
        }
        for (pos, (j, _)) in candidates[i].iter().enumerate() {
            if used[*j] {
                continue;
            }
            chosen[i] = Some(pos);
            used[*j] = true;
            if assign(candidates, i + 1, chosen, used) {
                return true;
            }
            used[*j] = false;
            chosen[i] = None;
        }
        false
    }
    let mut chosen: Vec<Option<usize>> = vec![None; s];
    let mut used = vec![false; s];
    if !assign(&candidates, 0, &mut chosen, &mut used) {
        return Err(Error::NoIsomorphismFound);
    }
    let mut permutation = Vec::with_capacity(s);
    let mut isos = Vec::with_capacity(s);
    for (i, pos) in chosen.into_iter().enumerate() {
        let (j, iso) = candidates[i][pos.unwrap()].clone();
        permutation.push(j);
        isos.push(iso);
    }
    Ok(Matching { permutation, isos })
}

/// Inside a completely reducible H with decomposition `d`, locate a normal
/// Hopf subalgebra K as the internal tensor product of a sub-family:
/// greedily grow a maximal independent set M of factors, then K equals the
/// product of the complementary factors P, verified by isomorphism.
pub fn normal_inside_cr(
    h: &Arc<HopfAlgebra>,
    k: &SubHopf,
    d: &Decomposition,
) -> Result<(Vec<usize>, HopfMorphism)> {
    if d.ambient.as_ref() != h.as_ref() {
        return Err(Error::SameAlgebraRequired);
    }
    if !k.is_normal() {
        return Err(Error::NotNormal);
    }
    // Greedy maximal M ⊆ Λ with ⟨K, K_λ | λ ∈ M⟩ ≅ K ⊗ (⊗_M K_λ),
    // tracked through dimension growth.
    let mut m_set = Vec::new();
    let mut span = k.space().clone();
    for (lambda, factor) in d.factors.iter().enumerate() {
        let grown = one_sided_product(h, &span, factor.space());
        if grown.dim() == span.dim() * factor.dim() {
            span = grown;
            m_set.push(lambda);
        }
    }
    let p_set: Vec<usize> = (0..d.factors.len())
        .filter(|i| !m_set.contains(i))
        .collect();
    // The product of the P-factors must recover K exactly.
    let mut k_prime = Subspace::line(h.unit_vec());
    for &i in &p_set {
        k_prime = one_sided_product(h, &k_prime, d.factors[i].space());
    }
    if &k_prime != k.space() {
        return Err(Error::Structure(
            "complementary factors do not recover K".into(),
        ));
    }
    // Verified isomorphism ⊗_{λ∈P} K_λ → K.
    let inner = Arc::clone(k.induced());
    let mut inner_factors = Vec::with_capacity(p_set.len());
    for &i in &p_set {
        let rows: Vec<Vec<Scalar>> = d.factors[i]
            .space()
            .basis_rows()
            .iter()
            .map(|r| k.restrict_vec(r).expect("P-factors lie inside K"))
            .collect();
        let space = Subspace::from_vectors(inner.dim(), &rows);
        inner_factors.push(SubHopf::new(&inner, space)?);
    }
    let decomposition = decomposition_from_factors(&inner, inner_factors)?;
    Ok((p_set, decomposition.iso))
}

/// Two normal Hopf subalgebras with trivial intersection centralize each
/// other, and their product is their tensor product.
pub fn commuting_check(h: &Arc<HopfAlgebra>, m: &SubHopf, n: &SubHopf) -> Result<Report> {
    if !m.is_normal() {
        return Err(Error::Precondition("M is not normal".into()));
    }
    if !n.is_normal() {
        return Err(Error::Precondition("N is not normal".into()));
    }
    let meet = m.space().intersect(n.space());
    if meet.dim() != 1 {
        return Err(Error::IntersectionNotTrivial(meet.dim()));
    }
    let mut report = Report::new("commutation of independent normal Hopf subalgebras");
    let commute = check_elementwise_commutation(h, m.space(), n.space());
    report.record(
        "mn = nm on all basis pairs",
        commute.is_ok(),
        commute.err().map(|e| e.to_string()).unwrap_or_default(),
    );
    // MN ≅ M ⊗ N with MN as the ambient algebra.
    let mn = SubHopf::new(h, one_sided_product(h, m.space(), n.space()))?;
    let inner = Arc::clone(mn.induced());
    let mut inner_factors = Vec::new();
    for f in [m, n] {
        let rows: Vec<Vec<Scalar>> = f
            .space()
            .basis_rows()
            .iter()
            .map(|r| mn.restrict_vec(r).expect("factors lie inside MN"))
            .collect();
        let space = Subspace::from_vectors(inner.dim(), &rows);
        inner_factors.push(SubHopf::new(&inner, space)?);
    }
    let result = decomposition_from_factors(&inner, inner_factors);
    report.record(
        "MN ≅ M ⊗ N via the multiplication map",
        result.is_ok(),
        result.err().map(|e| e.to_string()).unwrap_or_default(),
    );
    Ok(report)
}
