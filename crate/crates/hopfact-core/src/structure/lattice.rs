//! The finite lattice of normal Hopf subalgebras of a semisimple Hopf
//! algebra, enumerated through idempotent integrals.
//!
//! Every rationally-defined normal Hopf subalgebra K has a rational central
//! idempotent integral Λ_K (a subset sum of the primitive rational central
//! idempotents with counit 1), and K is recovered from Λ_K as the span of the
//! one-sided slices of ΔΛ_K — the Larson–Sweedler map K* → K, f ↦ f⇀Λ_K, is
//! onto. The scan over subset sums therefore finds every candidate; a filter
//! chain (integral property, Hopf subalgebra, normality) keeps exactly the
//! genuine ones, so the enumeration is sound regardless of input.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{vecops, Scalar, Subspace};
use crate::hopf::HopfAlgebra;
use crate::report::Report;
use crate::subobjects::{
    one_sided_product, subalgebra_flags, subspace_order, SubHopf,
};

use super::decomposition::ksr_decompose;
use super::idempotents::rational_central_idempotents;

/// The lattice of normal Hopf subalgebras with containment, meet and join
/// tables. Elements are sorted by dimension, then lexicographically.
#[derive(Clone, Debug)]
pub struct NormalLattice {
    pub h: Arc<HopfAlgebra>,
    pub elements: Vec<SubHopf>,
    /// `leq[i][j]` iff element i is contained in element j.
    pub leq: Vec<Vec<bool>>,
    /// Index of the intersection of elements i and j.
    pub meet: Vec<Vec<usize>>,
    /// Index of the product subalgebra of elements i and j.
    pub join: Vec<Vec<usize>>,
    pub bottom: usize,
    pub top: usize,
    /// Minimal elements above the bottom.
    pub atoms: Vec<usize>,
}

impl NormalLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.elements.iter().map(SubHopf::dim).collect()
    }

    /// Index of a lattice element with the given subspace.
    pub fn index_of(&self, space: &Subspace) -> Option<usize> {
        self.elements.iter().position(|e| e.space() == space)
    }
}

/// Enumerate the normal Hopf subalgebra lattice of a semisimple Hopf algebra.
pub fn enumerate_normal_lattice(h: &Arc<HopfAlgebra>) -> Result<NormalLattice> {
    if !h.is_semisimple() {
        return Err(Error::NotSemisimple);
    }
    let n = h.dim();
    let idems = rational_central_idempotents(h)?;
    let r = idems.len();
    if r > 22 {
        return Err(Error::InvalidInput(format!(
            "lattice enumeration supports at most 22 rational central components, found {r}"
        )));
    }
    // Exactly one primitive idempotent carries ε = 1; every integral subset
    // sum must contain it.
    let eps_one = (0..r)
        .find(|&i| h.counit_of(&idems[i]).is_one())
        .ok_or_else(|| Error::Structure("no central idempotent with counit 1".into()))?;
    let others: Vec<usize> = (0..r).filter(|&i| i != eps_one).collect();
    // Cheap per-idempotent data for the subset prefilters: the trace of
    // left multiplication (additive in the subset), and the antipode
    // permutation of the idempotents.
    let traces: Vec<i64> = idems
        .iter()
        .map(|e| {
            let mut t = Scalar::zero();
            for j in 0..n {
                t += h.mul_vec(e, &vecops::basis(n, j))[j].clone();
            }
            debug_assert!(t.is_integer());
            t.numer().try_into().unwrap_or(1 << 40)
        })
        .collect();
    let antipode_perm: Option<Vec<usize>> = idems
        .iter()
        .map(|e| {
            let img = h.antipode_of(e);
            idems.iter().position(|f| f.coords() == img)
        })
        .collect();

    let mut candidates: BTreeMap<Subspace, Vec<Vec<Scalar>>> = BTreeMap::new();
    for mask in 0u64..(1 << others.len()) {
        let mut subset = vec![eps_one];
        for (bit, &idx) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                subset.push(idx);
            }
        }
        // Prefilter: trace of left multiplication by the candidate integral
        // must be n / dim K for some divisor dim K of n.
        let trace: i64 = subset.iter().map(|&i| traces[i]).sum();
        if trace <= 0 || n as i64 % trace != 0 {
            continue;
        }
        // Prefilter: the integral is antipode-invariant.
        if let Some(perm) = &antipode_perm {
            let closed = subset.iter().all(|&i| subset.contains(&perm[i]));
            if !closed {
                continue;
            }
        }
        let mut e_s = vecops::zero(n);
        for &i in &subset {
            vecops::add_scaled(&mut e_s, &idems[i], &Scalar::one());
        }
        let space = slice_span(h, &e_s);
        candidates.entry(space).or_default().push(e_s);
    }

    let mut elements: Vec<SubHopf> = Vec::new();
    let push_unique = |elements: &mut Vec<SubHopf>, sub: SubHopf| {
        if !elements.iter().any(|e| e.space() == sub.space()) {
            elements.push(sub);
        }
    };
    for (space, producers) in candidates {
        // The producing subset sum must be the idempotent integral of the
        // candidate: contained in it and invariant under left multiplication.
        let rows = space.basis_rows();
        let is_integral = |e_s: &Vec<Scalar>| {
            space.contains_vec(e_s)
                && rows.iter().all(|x| {
                    h.mul_vec(x, e_s) == vecops::scale(e_s, &h.counit_of(x))
                })
        };
        if !producers.iter().any(is_integral) {
            continue;
        }
        if !subalgebra_flags(h, &space).is_hopf_subalgebra() {
            continue;
        }
        let sub = SubHopf::new(h, space)?;
        if !sub.is_normal() {
            continue;
        }
        push_unique(&mut elements, sub);
    }
    push_unique(&mut elements, SubHopf::trivial(h));
    push_unique(&mut elements, SubHopf::full(h));

    // Defensive fixpoint: close under intersection and product.
    loop {
        let mut new_spaces = Vec::new();
        for i in 0..elements.len() {
            for j in i + 1..elements.len() {
                let meet = elements[i].space().intersect(elements[j].space());
                if elements.iter().all(|e| e.space() != &meet)
                    && !new_spaces.contains(&meet)
                {
                    new_spaces.push(meet);
                }
                let join = one_sided_product(h, elements[i].space(), elements[j].space());
                if elements.iter().all(|e| e.space() != &join)
                    && !new_spaces.contains(&join)
                {
                    new_spaces.push(join);
                }
            }
        }
        if new_spaces.is_empty() {
            break;
        }
        for space in new_spaces {
            let sub = SubHopf::new(h, space).map_err(|e| {
                Error::Structure(format!(
                    "meet/join of normal Hopf subalgebras failed to verify: {e}"
                ))
            })?;
            if !sub.is_normal() {
                return Err(Error::Structure(
                    "meet/join of normal Hopf subalgebras is not normal".into(),
                ));
            }
            push_unique(&mut elements, sub);
        }
    }

    elements.sort_by(|a, b| subspace_order(a.space(), b.space()));
    let m = elements.len();
    let mut leq = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            leq[i][j] = elements[j].space().contains(elements[i].space());
        }
    }
    let mut meet = vec![vec![0usize; m]; m];
    let mut join = vec![vec![0usize; m]; m];
    for i in 0..m {
        for j in 0..m {
            let meet_space = elements[i].space().intersect(elements[j].space());
            meet[i][j] = elements
                .iter()
                .position(|e| e.space() == &meet_space)
                .ok_or_else(|| Error::Structure("lattice is not meet-closed".into()))?;
            let join_space = one_sided_product(h, elements[i].space(), elements[j].space());
            join[i][j] = elements
                .iter()
                .position(|e| e.space() == &join_space)
                .ok_or_else(|| Error::Structure("lattice is not join-closed".into()))?;
        }
    }
    let bottom = 0;
    let top = m - 1;
    debug_assert_eq!(elements[bottom].dim(), 1);
    debug_assert!(elements[top].is_full());
    let atoms = (0..m)
        .filter(|&i| {
            i != bottom
                && (0..m).all(|j| j == bottom || j == i || !leq[j][i])
        })
        .collect();
    Ok(NormalLattice {
        h: h.clone(),
        elements,
        leq,
        meet,
        join,
        bottom,
        top,
        atoms,
    })
}

/// Span of the one-sided slices of ΔΛ. For a genuine idempotent integral of
/// a Hopf subalgebra K this equals K (and equals its coalgebra closure).
fn slice_span(h: &HopfAlgebra, lambda: &[Scalar]) -> Subspace {
    let n = h.dim();
    let mut rows: BTreeMap<usize, Vec<Scalar>> = BTreeMap::new();
    let mut cols: BTreeMap<usize, Vec<Scalar>> = BTreeMap::new();
    for ((j, k), c) in h.comult_of(lambda) {
        rows.entry(j).or_insert_with(|| vecops::zero(n))[k] += &c;
        cols.entry(k).or_insert_with(|| vecops::zero(n))[j] += c;
    }
    let mut vectors: Vec<Vec<Scalar>> = rows.into_values().collect();
    vectors.extend(cols.into_values());
    vectors.sort();
    vectors.dedup();
    Subspace::from_vectors(n, &vectors)
}

/// Atoms of the lattice: the minimal normal Hopf subalgebras.
pub fn minimal_normals(lat: &NormalLattice) -> Vec<SubHopf> {
    lat.atoms
        .iter()
        .map(|&i| lat.elements[i].clone())
        .collect()
}

/// Direct-factor facts about one lattice element.
#[derive(Clone, Debug)]
pub struct DirectFactorScan {
    /// K has a complement: some K″ with K ∩ K″ = k and K·K″ = H.
    pub is_direct_factor: bool,
    /// The first complement in canonical order, when one exists.
    pub complement: Option<usize>,
    /// K is contained in a proper direct factor (a direct factor ≠ H).
    pub contained_in_direct_factor: bool,
}

/// Scan the lattice for complement pairs involving or containing `K`.
pub fn direct_factor_scan(lat: &NormalLattice, k: &SubHopf) -> Result<DirectFactorScan> {
    let idx = lat
        .index_of(k.space())
        .ok_or_else(|| Error::InvalidInput("K is not a lattice element".into()))?;
    let m = lat.len();
    let complement = (0..m)
        .find(|&j| lat.meet[idx][j] == lat.bottom && lat.join[idx][j] == lat.top);
    // Proper direct factors: elements other than H admitting a complement.
    let proper_direct: Vec<usize> = (0..m)
        .filter(|&i| {
            i != lat.top
                && (0..m).any(|j| lat.meet[i][j] == lat.bottom && lat.join[i][j] == lat.top)
        })
        .collect();
    let contained = proper_direct.iter().any(|&i| lat.leq[idx][i]);
    Ok(DirectFactorScan {
        is_direct_factor: complement.is_some(),
        complement,
        contained_in_direct_factor: contained,
    })
}

/// Truth values of the Head-property implication: if every proper normal
/// Hopf subalgebra is contained in a proper direct factor, then H is
/// completely reducible. ("Proper direct factor" excludes the trivial pair
/// (H, k), which would make the hypothesis vacuous.)
#[derive(Clone, Debug)]
pub struct HeadProperty {
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl HeadProperty {
    pub fn implication_holds(&self) -> bool {
        !self.hypothesis || self.conclusion
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("Head property");
        r.record(
            "hypothesis ⇒ conclusion",
            self.implication_holds(),
            format!(
                "hypothesis = {}, conclusion = {}",
                self.hypothesis, self.conclusion
            ),
        );
        r
    }
}

/// Evaluate both sides of the Head-property implication and assert it.
pub fn head_property_check(h: &Arc<HopfAlgebra>, lat: &NormalLattice) -> Result<HeadProperty> {
    let mut hypothesis = true;
    for i in 0..lat.len() {
        if i == lat.top {
            continue;
        }
        let scan = direct_factor_scan(lat, &lat.elements[i])?;
        if !scan.contained_in_direct_factor {
            hypothesis = false;
            break;
        }
    }
    let conclusion = matches!(
        ksr_decompose(h)?,
        super::decomposition::KsrOutcome::Decomposed(_)
    );
    let head = HeadProperty {
        hypothesis,
        conclusion,
    };
    if !head.implication_holds() {
        return Err(Error::Structure(
            "Head property implication fails: hypothesis true but H not completely reducible"
                .into(),
        ));
    }
    Ok(head)
}
