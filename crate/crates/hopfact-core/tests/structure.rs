//! Structure-level checks against brute-force group-theoretic oracles.

use std::sync::Arc;

use hopfact_core::error::Error;
use hopfact_core::exact::Scalar;
use hopfact_core::groups::{
    cyclic, dihedral, dual_group_algebra, exact_group_factorization, group_algebra, klein_four,
    preset, quaternion8, span_of_elements, sub_hopf_from_subgroup, subgroup_oracle, symmetric3,
    FiniteGroup,
};
use hopfact_core::hopf::HopfAlgebra;
use hopfact_core::structure::{
    check_dimension_formula, commuting_check, complement_quotient_iso, direct_factor_scan,
    enumerate_normal_lattice, factorization_from_projections, head_property_check,
    hopf_iso_search, is_factorization, ksr_decompose, ksr_decompose_ordered,
    ksr_uniqueness_check, minimal_normals, normal_factor_iso, normal_inside_cr,
    projections_from_factorization, rational_central_idempotents, smash_factor_iso, socle,
    verify_lattice_duality, FactorizationKind, KsrOutcome,
};
use hopfact_core::subobjects::SubHopf;

fn algebra(g: &FiniteGroup) -> Arc<HopfAlgebra> {
    Arc::new(group_algebra(g))
}

fn subgroup(h: &Arc<HopfAlgebra>, g: &FiniteGroup, elems: &[usize]) -> SubHopf {
    sub_hopf_from_subgroup(h, g, elems).unwrap()
}

#[test]
fn factorization_kinds() {
    // (kC3, kC2) in kS3: half-normal.
    let s3 = symmetric3();
    let h = algebra(&s3);
    let a = subgroup(&h, &s3, &[0, 1, 2]);
    let l = subgroup(&h, &s3, &[0, 3]);
    let f = is_factorization(&h, &a, &l).unwrap();
    assert_eq!(f.kind, FactorizationKind::HalfNormal);

    // (kA3, kA3): wrong dimensions.
    assert!(matches!(
        is_factorization(&h, &a, &a),
        Err(Error::NotAFactorization(_))
    ));

    // (kC2, kC3) in kC6: normal.
    let c6 = cyclic(6);
    let hc6 = algebra(&c6);
    let a2 = subgroup(&hc6, &c6, &[0, 3]);
    let a3 = subgroup(&hc6, &c6, &[0, 2, 4]);
    let f = is_factorization(&hc6, &a2, &a3).unwrap();
    assert_eq!(f.kind, FactorizationKind::Normal);
}

#[test]
fn dimension_formula_in_ks3() {
    let s3 = symmetric3();
    let h = algebra(&s3);
    let ka3 = subgroup(&h, &s3, &[0, 1, 2]);
    let kc2 = subgroup(&h, &s3, &[0, 3]);
    let kc2b = subgroup(&h, &s3, &[0, 4]);

    // A = L: |LA| = |A|.
    assert!(check_dimension_formula(&h, &ka3, &ka3).unwrap().passed());
    // Two transposition subgroups: 2·2/1 = 4.
    assert!(check_dimension_formula(&h, &kc2, &kc2b).unwrap().passed());
    // kA3 and kC2: 3·2/1 = 6.
    assert!(check_dimension_formula(&h, &ka3, &kc2).unwrap().passed());
}

#[test]
fn dimension_formula_all_subgroup_pairs_of_s3() {
    let s3 = symmetric3();
    let h = algebra(&s3);
    let oracle = subgroup_oracle(&s3);
    for a_elems in &oracle.subgroups {
        for b_elems in &oracle.subgroups {
            let a = subgroup(&h, &s3, a_elems);
            let b = subgroup(&h, &s3, b_elems);
            let report = check_dimension_formula(&h, &a, &b).unwrap();
            assert!(report.passed(), "pair {a_elems:?}, {b_elems:?}: {report}");
        }
    }
}

#[test]
fn normal_factor_isos() {
    // kC6 ≅ kC2 ⊗ kC3.
    let c6 = cyclic(6);
    let h = algebra(&c6);
    let a = subgroup(&h, &c6, &[0, 3]);
    let l = subgroup(&h, &c6, &[0, 2, 4]);
    let phi = normal_factor_iso(&h, &a, &l).unwrap();
    assert!(phi.is_isomorphism());

    // Klein four ≅ kC2 ⊗ kC2'.
    let v4 = klein_four();
    let hv = algebra(&v4);
    let a = subgroup(&hv, &v4, &[0, 1]);
    let b = subgroup(&hv, &v4, &[0, 2]);
    assert!(normal_factor_iso(&hv, &a, &b).unwrap().is_isomorphism());

    // kS3 with (kA3, kC2): L is not normal.
    let s3 = symmetric3();
    let hs = algebra(&s3);
    let ka3 = subgroup(&hs, &s3, &[0, 1, 2]);
    let kc2 = subgroup(&hs, &s3, &[0, 3]);
    assert!(matches!(
        normal_factor_iso(&hs, &ka3, &kc2),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn smash_factor_iso_flagship_and_edges() {
    // kS3 ≅ kC3 # kC2.
    let s3 = symmetric3();
    let h = algebra(&s3);
    let a = subgroup(&h, &s3, &[0, 1, 2]);
    let l = subgroup(&h, &s3, &[0, 3]);
    let phi = smash_factor_iso(&h, &a, &l).unwrap();
    assert!(phi.is_isomorphism());
    assert_eq!(phi.domain.dim(), 6);

    // Trivial L = k: A # k = A.
    let k = SubHopf::trivial(&h);
    let phi = smash_factor_iso(&h, &a, &k).unwrap();
    assert!(phi.is_isomorphism());
    assert_eq!(phi.codomain.dim(), 3);

    // Proper AL inside kD4: A = the center, L = a non-central reflection
    // subgroup; AL is the 4-dimensional Klein subalgebra.
    let d4 = dihedral(4);
    let hd = algebra(&d4);
    let center = subgroup(&hd, &d4, &[0, 2]);
    let refl = subgroup(&hd, &d4, &[0, 4]);
    let phi = smash_factor_iso(&hd, &center, &refl).unwrap();
    assert!(phi.is_isomorphism());
    assert_eq!(phi.codomain.dim(), 4);

    // Non-normal A is rejected.
    let kc2 = subgroup(&h, &s3, &[0, 3]);
    assert!(matches!(
        smash_factor_iso(&h, &kc2, &a),
        Err(Error::NotNormal)
    ));
}

#[test]
fn complement_quotient_isos() {
    // kC2 ≅ kS3 // kA3.
    let s3 = symmetric3();
    let h = algebra(&s3);
    let a = subgroup(&h, &s3, &[0, 1, 2]);
    let l = subgroup(&h, &s3, &[0, 3]);
    assert!(complement_quotient_iso(&h, &a, &l).unwrap().is_isomorphism());

    // L = k, A = H: k ≅ H//H.
    let full = SubHopf::full(&h);
    let k = SubHopf::trivial(&h);
    let phi = complement_quotient_iso(&h, &full, &k).unwrap();
    assert!(phi.is_isomorphism());
    assert_eq!(phi.codomain.dim(), 1);

    // kC3 ≅ kC6 // kC2.
    let c6 = cyclic(6);
    let hc = algebra(&c6);
    let a2 = subgroup(&hc, &c6, &[0, 3]);
    let a3 = subgroup(&hc, &c6, &[0, 2, 4]);
    assert!(complement_quotient_iso(&hc, &a2, &a3)
        .unwrap()
        .is_isomorphism());
}

#[test]
fn projection_pair_round_trips() {
    let c6 = cyclic(6);
    let h = algebra(&c6);
    let a = subgroup(&h, &c6, &[0, 3]);
    let l = subgroup(&h, &c6, &[0, 2, 4]);
    let f = is_factorization(&h, &a, &l).unwrap();
    let pair = projections_from_factorization(&f).unwrap();
    assert!(pair.pi1.is_hopf_map() && pair.pi2.is_hopf_map());

    // Round trip: factorization → projections → factorization.
    let back = factorization_from_projections(&h, &pair.pi1.matrix, &pair.pi2.matrix).unwrap();
    assert_eq!(back.a.space(), a.space());
    assert_eq!(back.l.space(), l.space());

    // Round trip the other way: projections → factorization → projections.
    let pair2 = projections_from_factorization(&back).unwrap();
    assert_eq!(pair2.pi1.matrix, pair.pi1.matrix);
    assert_eq!(pair2.pi2.matrix, pair.pi2.matrix);

    // Wrong kind is rejected.
    let s3 = symmetric3();
    let hs = algebra(&s3);
    let f = is_factorization(
        &hs,
        &subgroup(&hs, &s3, &[0, 1, 2]),
        &subgroup(&hs, &s3, &[0, 3]),
    )
    .unwrap();
    assert!(matches!(
        projections_from_factorization(&f),
        Err(Error::WrongKind { .. })
    ));

    // Corrupted projection (not ε-compatible) is rejected.
    let mut bad = pair.pi1.matrix.clone();
    bad[(0, 0)] = Scalar::from_int(2);
    assert!(matches!(
        factorization_from_projections(&h, &bad, &pair.pi2.matrix),
        Err(Error::InvalidProjections(_))
    ));

    // The trivial pair (id, u∘ε) recovers A = H, L = k.
    let id = hopfact_core::exact::Matrix::identity(6);
    let ue = h.unit_counit_matrix();
    let f = factorization_from_projections(&h, &id, &ue).unwrap();
    assert_eq!(f.a.dim(), 6);
    assert_eq!(f.l.dim(), 1);
}

#[test]
fn lattice_matches_subgroup_oracle() {
    for name in ["C6", "S3", "D4", "Q8", "A4"] {
        let g = preset(name).unwrap();
        let h = algebra(&g);
        let lat = enumerate_normal_lattice(&h).unwrap();
        let oracle = subgroup_oracle(&g);
        assert_eq!(lat.len(), oracle.normal_subgroups.len(), "{name}");
        // The bijection N ↦ kN matches dimensions and containments.
        let mut oracle_spaces: Vec<_> = oracle
            .normal_subgroups
            .iter()
            .map(|n| span_of_elements(g.order(), n))
            .collect();
        oracle_spaces.sort_by(hopfact_core::subobjects::subspace_order);
        for (e, s) in lat.elements.iter().zip(&oracle_spaces) {
            assert_eq!(e.space(), s, "{name}");
        }
    }
}

#[test]
fn lattice_of_dual_group_algebra() {
    // Hopf subalgebras of k^S3 are the coset-constant function algebras of
    // the normal subgroups: dims {1, 2, 6}.
    let h = Arc::new(dual_group_algebra(&symmetric3()));
    let lat = enumerate_normal_lattice(&h).unwrap();
    assert_eq!(lat.dims(), vec![1, 2, 6]);
}

#[test]
fn minimal_normals_examples() {
    let s3 = symmetric3();
    let h = algebra(&s3);
    let lat = enumerate_normal_lattice(&h).unwrap();
    let mins = minimal_normals(&lat);
    assert_eq!(mins.len(), 1);
    assert_eq!(mins[0].space(), &span_of_elements(6, &[0, 1, 2]));

    let q8 = quaternion8();
    let hq = algebra(&q8);
    let lat = enumerate_normal_lattice(&hq).unwrap();
    let mins = minimal_normals(&lat);
    assert_eq!(mins.len(), 1);
    assert_eq!(mins[0].dim(), 2);

    let c6 = cyclic(6);
    let hc = algebra(&c6);
    let lat = enumerate_normal_lattice(&hc).unwrap();
    let dims: Vec<usize> = minimal_normals(&lat).iter().map(SubHopf::dim).collect();
    assert_eq!(dims, vec![2, 3]);
}

#[test]
fn socle_examples() {
    let s3 = symmetric3();
    let h = algebra(&s3);
    let (soc, dec) = socle(&h).unwrap();
    assert_eq!(soc.space(), &span_of_elements(6, &[0, 1, 2]));
    assert_eq!(dec.factors.len(), 1);

    let d4 = dihedral(4);
    let hd = algebra(&d4);
    let (soc, _) = socle(&hd).unwrap();
    assert_eq!(soc.dim(), 2);
    assert_eq!(soc.space(), &span_of_elements(8, &[0, 2]));

    let c6 = cyclic(6);
    let hc = algebra(&c6);
    let (soc, dec) = socle(&hc).unwrap();
    assert!(soc.is_full());
    let dims: Vec<usize> = dec.factors.iter().map(SubHopf::dim).collect();
    assert_eq!(dims, vec![2, 3]);
    assert!(dec.iso.is_isomorphism());
}

#[test]
fn ksr_on_kc30() {
    let c30 = cyclic(30);
    let h = algebra(&c30);
    let KsrOutcome::Decomposed(d) = ksr_decompose(&h).unwrap() else {
        panic!("kC30 must be completely reducible");
    };
    let dims: Vec<usize> = d.factors.iter().map(SubHopf::dim).collect();
    assert_eq!(dims, vec![2, 3, 5]);
    assert!(d.iso.is_isomorphism());

    // A reversed greedy order gives a matching decomposition.
    let KsrOutcome::Decomposed(d2) = ksr_decompose_ordered(&h, true).unwrap() else {
        panic!("reversed order must also decompose");
    };
    let matching = ksr_uniqueness_check(&d, &d2).unwrap();
    assert_eq!(matching.permutation.len(), 3);
    for iso in &matching.isos {
        assert!(iso.is_isomorphism());
    }
}

#[test]
fn ksr_obstructions() {
    let s3 = symmetric3();
    let h = algebra(&s3);
    match ksr_decompose(&h).unwrap() {
        KsrOutcome::NotCompletelyReducible(
            hopfact_core::structure::KsrObstruction::SocleProper { socle },
        ) => assert_eq!(socle.dim(), 3),
        other => panic!("expected a proper socle witness, got {other:?}"),
    }

    let d4 = dihedral(4);
    let hd = algebra(&d4);
    assert!(matches!(
        ksr_decompose(&hd).unwrap(),
        KsrOutcome::NotCompletelyReducible(_)
    ));

    // The one-dimensional algebra decomposes with an empty factor list.
    let k = Arc::new(HopfAlgebra::unit_algebra());
    let KsrOutcome::Decomposed(d) = ksr_decompose(&k).unwrap() else {
        panic!("k must be completely reducible");
    };
    assert!(d.factors.is_empty());
    assert!(d.iso.is_isomorphism());
}

#[test]
fn ksr_uniqueness_on_klein_four() {
    // Two decompositions through different complementary pairs.
    let v4 = klein_four();
    let h = algebra(&v4);
    let a = subgroup(&h, &v4, &[0, 1]);
    let b = subgroup(&h, &v4, &[0, 2]);
    let c = subgroup(&h, &v4, &[0, 3]);
    let d1 = hopfact_core::structure::decomposition_from_factors(&h, vec![a.clone(), b]).unwrap();
    let d2 = hopfact_core::structure::decomposition_from_factors(&h, vec![a, c]).unwrap();
    let matching = ksr_uniqueness_check(&d1, &d2).unwrap();
    assert_eq!(matching.permutation.len(), 2);
    // Identity case.
    let same = ksr_uniqueness_check(&d1, &d1).unwrap();
    assert_eq!(same.permutation, vec![0, 1]);
}

#[test]
fn normal_inside_cr_on_kc30() {
    let c30 = cyclic(30);
    let h = algebra(&c30);
    let KsrOutcome::Decomposed(d) = ksr_decompose(&h).unwrap() else {
        panic!("kC30 decomposes");
    };
    // K = kC6 = k⟨5⟩ (elements {0, 5, 10, 15, 20, 25}).
    let k = subgroup(&h, &c30, &[0, 5, 10, 15, 20, 25]);
    let (p, iso) = normal_inside_cr(&h, &k, &d).unwrap();
    assert_eq!(p.len(), 2);
    assert!(iso.is_isomorphism());
    let dims: Vec<usize> = p.iter().map(|&i| d.factors[i].dim()).collect();
    assert_eq!(dims, vec![2, 3]);

    // K = k: empty index set.
    let (p, _) = normal_inside_cr(&h, &SubHopf::trivial(&h), &d).unwrap();
    assert!(p.is_empty());

    // K = H: everything.
    let (p, _) = normal_inside_cr(&h, &SubHopf::full(&h), &d).unwrap();
    assert_eq!(p.len(), 3);
}

#[test]
fn direct_factor_scans() {
    // kA3 in kS3: no complement.
    let s3 = symmetric3();
    let h = algebra(&s3);
    let lat = enumerate_normal_lattice(&h).unwrap();
    let ka3 = subgroup(&h, &s3, &[0, 1, 2]);
    let scan = direct_factor_scan(&lat, &ka3).unwrap();
    assert!(!scan.is_direct_factor);
    assert!(!scan.contained_in_direct_factor);

    // kC2 in kC6: complement kC3.
    let c6 = cyclic(6);
    let hc = algebra(&c6);
    let lat6 = enumerate_normal_lattice(&hc).unwrap();
    let kc2 = subgroup(&hc, &c6, &[0, 3]);
    let scan = direct_factor_scan(&lat6, &kc2).unwrap();
    assert!(scan.is_direct_factor);
    let complement = &lat6.elements[scan.complement.unwrap()];
    assert_eq!(complement.space(), &span_of_elements(6, &[0, 2, 4]));
    // Whenever a complement is reported, the tensor iso succeeds.
    assert!(normal_factor_iso(&hc, &kc2, complement).unwrap().is_isomorphism());

    // k and H are always direct factors.
    for lat in [&lat, &lat6] {
        let bottom = &lat.elements[lat.bottom];
        let top = &lat.elements[lat.top];
        assert!(direct_factor_scan(lat, bottom).unwrap().is_direct_factor);
        assert!(direct_factor_scan(lat, top).unwrap().is_direct_factor);
    }
}

#[test]
fn head_property_examples() {
    // kC6: hypothesis and conclusion both hold.
    let c6 = cyclic(6);
    let hc = algebra(&c6);
    let lat = enumerate_normal_lattice(&hc).unwrap();
    let head = head_property_check(&hc, &lat).unwrap();
    assert!(head.hypothesis && head.conclusion);

    // kS3: both fail, implication holds.
    let s3 = symmetric3();
    let hs = algebra(&s3);
    let lat = enumerate_normal_lattice(&hs).unwrap();
    let head = head_property_check(&hs, &lat).unwrap();
    assert!(!head.hypothesis && !head.conclusion);

    // kD4: both fail, implication holds.
    let d4 = dihedral(4);
    let hd = algebra(&d4);
    let lat = enumerate_normal_lattice(&hd).unwrap();
    let head = head_property_check(&hd, &lat).unwrap();
    assert!(!head.hypothesis && !head.conclusion);
}

#[test]
fn duality_for_ks3() {
    let h = algebra(&symmetric3());
    let report = verify_lattice_duality(&h).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn duality_for_dual_group_algebras() {
    // The anti-isomorphism holds starting from the function algebra side too.
    for name in ["S3", "D4"] {
        let g = preset(name).unwrap();
        let h = Arc::new(dual_group_algebra(&g));
        let report = verify_lattice_duality(&h).unwrap();
        assert!(report.passed(), "dual of {name}: {report}");
    }
}

#[test]
fn dual_quotient_dimensions_are_cofactors() {
    // dim (H//K)* = |H| / |K| for every lattice element.
    for name in ["C6", "S3", "D4", "Q8"] {
        let g = preset(name).unwrap();
        let h = algebra(&g);
        let lat = enumerate_normal_lattice(&h).unwrap();
        for k in &lat.elements {
            let embedded = hopfact_core::subobjects::quotient_dual_embed(&h, k).unwrap();
            assert_eq!(embedded.dim() * k.dim(), h.dim(), "{name}");
        }
    }
}

#[test]
fn every_preset_passes_the_axiom_suite() {
    for name in hopfact_core::groups::preset_names() {
        let g = preset(&name).unwrap();
        assert!(
            group_algebra(&g).verify_axioms().all_pass(),
            "group algebra of {name}"
        );
        assert!(
            dual_group_algebra(&g).verify_axioms().all_pass(),
            "dual group algebra of {name}"
        );
    }
}

#[test]
fn commuting_checks() {
    // kC2 and kC3 in kC6.
    let c6 = cyclic(6);
    let h = algebra(&c6);
    let m = subgroup(&h, &c6, &[0, 3]);
    let n = subgroup(&h, &c6, &[0, 2, 4]);
    assert!(commuting_check(&h, &m, &n).unwrap().passed());

    // The two minimal normals of k(C2 × S3): kC2 and kA3 commute and their
    // product has dimension 6.
    let g = cyclic(2).direct_product(&symmetric3());
    let hg = algebra(&g);
    let lat = enumerate_normal_lattice(&hg).unwrap();
    let mins = minimal_normals(&lat);
    assert_eq!(mins.len(), 2);
    let report = commuting_check(&hg, &mins[0], &mins[1]).unwrap();
    assert!(report.passed(), "{report}");
    let product = hopfact_core::subobjects::one_sided_product(
        &hg,
        mins[0].space(),
        mins[1].space(),
    );
    assert_eq!(product.dim(), 6);

    // M = N = kA3 violates the trivial-intersection precondition.
    let s3 = symmetric3();
    let hs = algebra(&s3);
    let ka3 = subgroup(&hs, &s3, &[0, 1, 2]);
    assert!(matches!(
        commuting_check(&hs, &ka3, &ka3),
        Err(Error::IntersectionNotTrivial(3))
    ));
}

#[test]
fn idempotent_integral_of_normal_subalgebra_is_central() {
    // For every normal Hopf subalgebra of the bundled group algebras, the
    // idempotent integral is central in the ambient algebra.
    for name in ["C6", "S3", "D4", "Q8"] {
        let g = preset(name).unwrap();
        let h = algebra(&g);
        for n in g.normal_subgroups() {
            let sub = subgroup(&h, &g, &n);
            let lambda = sub.integral_in_parent().unwrap();
            let center = h.center();
            assert!(center.contains_vec(&lambda), "{name}: {n:?}");
        }
    }
}

#[test]
fn rational_idempotents_of_dihedral() {
    // D4 has five rational central components.
    let h = group_algebra(&dihedral(4));
    assert_eq!(rational_central_idempotents(&h).unwrap().len(), 5);
}

#[test]
fn iso_search_distinguishes_groups() {
    // kC4 and kKlein4 have the same dimension but are not isomorphic.
    let c4 = algebra(&cyclic(4));
    let v4 = algebra(&klein_four());
    assert!(matches!(
        hopf_iso_search(&c4, &v4),
        Err(Error::NoIsomorphismFound)
    ));
    // kC6 ≅ kC2 ⊗ kC3 through the search as well.
    let c6 = algebra(&cyclic(6));
    let t = Arc::new(group_algebra(&cyclic(2)).tensor(&group_algebra(&cyclic(3))));
    assert!(hopf_iso_search(&t, &c6).unwrap().is_isomorphism());
    // Function algebras go through the dual path.
    let ds3 = Arc::new(dual_group_algebra(&symmetric3()));
    let ds3b = Arc::new(group_algebra(&symmetric3()).dual());
    assert!(hopf_iso_search(&ds3, &ds3b).unwrap().is_isomorphism());
}

#[test]
fn smash_reconstruction_matches_group_factorization() {
    // The full pipeline on S3 = C3 · C2 through the builder helper.
    let s3 = symmetric3();
    let (h, a, l) = exact_group_factorization(&s3, &[0, 1, 2], &[0, 3]).unwrap();
    let phi = smash_factor_iso(&h, &a, &l).unwrap();
    assert!(phi.is_isomorphism());
    assert_eq!(phi.codomain.dim(), 6);
}
