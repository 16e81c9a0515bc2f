//! Acceptance suite: one test per criterion, each printing a PASS line.
//! All assertions are exact (tolerance 0); the stated runtime budgets are
//! enforced with wall-clock checks. Tests that measure time hold a shared
//! lock so parallel test scheduling cannot distort the measurements.


use std::process::Command;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

use hopfact_core::groups::{
    cyclic, dihedral, dual_group_algebra, group_algebra, preset, span_of_elements,
    sub_hopf_from_subgroup, subgroup_oracle, symmetric3, FiniteGroup,
};
use hopfact_core::hopf::HopfAlgebra;
use hopfact_core::products::{bicrossed, extract_matched_pair, rebuild_and_compare, MatchedPair};
use hopfact_core::structure::{
    check_dimension_formula, enumerate_normal_lattice, factorization_from_projections,
    is_factorization, ksr_decompose, ksr_decompose_ordered, ksr_uniqueness_check,
    normal_factor_iso, normal_inside_cr, projection_properties, projections_from_factorization,
    smash_factor_iso, socle, verify_lattice_duality, KsrObstruction, KsrOutcome,
};
use hopfact_core::subobjects::{subspace_order, SubHopf};

fn lock() -> std::sync::MutexGuard<'static, ()> {
    static LOCK: OnceLock<Mutex<()>> = OnceLock::new();
    LOCK.get_or_init(|| Mutex::new(()))
        .lock()
        .unwrap_or_else(|poisoned| poisoned.into_inner())
}

fn algebra(g: &FiniteGroup) -> Arc<HopfAlgebra> {
    Arc::new(group_algebra(g))
}

fn subgroup(h: &Arc<HopfAlgebra>, g: &FiniteGroup, elems: &[usize]) -> SubHopf {
    sub_hopf_from_subgroup(h, g, elems).unwrap()
}

const PRESET_NAMES: [&str; 9] = ["C2", "C3", "C4", "C6", "Klein4", "S3", "D4", "Q8", "A4"];

#[test]
fn acceptance_01_axiom_suite() {
    let _g = lock();
    let start = Instant::now();
    for name in PRESET_NAMES {
        let g = preset(name).unwrap();
        let kg = group_algebra(&g);
        let report = kg.verify_axioms();
        assert!(report.all_pass(), "group algebra of {name} fails axioms");
        let dual = dual_group_algebra(&g);
        assert!(
            dual.verify_axioms().all_pass(),
            "dual group algebra of {name} fails axioms"
        );
    }
    // Tensor product kC2 ⊗ kC3.
    let tensor = group_algebra(&cyclic(2)).tensor(&group_algebra(&cyclic(3)));
    assert!(tensor.verify_axioms().all_pass(), "kC2 ⊗ kC3 fails axioms");
    // Bicrossed product built from the exact factorization S3 = C3·C2.
    let s3 = symmetric3();
    let h = algebra(&s3);
    let a = subgroup(&h, &s3, &[0, 1, 2]);
    let l = subgroup(&h, &s3, &[0, 3]);
    let mp = extract_matched_pair(&h, &a, &l).unwrap();
    let product = bicrossed(&mp).unwrap();
    assert!(product.verify_axioms().all_pass(), "bicrossed product fails axioms");
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "axiom suite took {elapsed:?}, budget 30s"
    );
    println!("[criterion 01] PASS axiom suite over all bundled instances in {elapsed:?}");
}

#[test]
fn acceptance_02_lattice_oracle_equivalence() {
    let _g = lock();
    let start = Instant::now();
    let expected_counts = [("S3", 3), ("D4", 6), ("Q8", 6), ("C6", 4), ("A4", 3)];
    for name in PRESET_NAMES {
        let g = preset(name).unwrap();
        let h = algebra(&g);
        let lat = enumerate_normal_lattice(&h).unwrap();
        let oracle = subgroup_oracle(&g);
        assert_eq!(
            lat.len(),
            oracle.normal_subgroups.len(),
            "{name}: lattice size mismatch"
        );
        // The bijection N ↦ kN is an order isomorphism: the lattice elements
        // are exactly the subgroup spans, and containment matches inclusion.
        let mut spans: Vec<_> = oracle
            .normal_subgroups
            .iter()
            .map(|n| span_of_elements(g.order(), n))
            .collect();
        spans.sort_by(subspace_order);
        for (e, s) in lat.elements.iter().zip(&spans) {
            assert_eq!(e.space(), s, "{name}: element mismatch");
        }
        for i in 0..lat.len() {
            for j in 0..lat.len() {
                assert_eq!(
                    lat.leq[i][j],
                    spans[j].contains(&spans[i]),
                    "{name}: containment mismatch at ({i},{j})"
                );
            }
        }
        if let Some((_, count)) = expected_counts.iter().find(|(n, _)| *n == name) {
            assert_eq!(lat.len(), *count, "{name}: expected {count} elements");
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "lattice suite took {elapsed:?}, budget 60s"
    );
    println!("[criterion 02] PASS lattice ↔ subgroup oracle for all presets in {elapsed:?}");
}

#[test]
fn acceptance_03_dimension_formula() {
    let _g = lock();
    let mut names: Vec<String> = (1..=12).map(|n| format!("C{n}")).collect();
    names.extend(["Klein4", "S3", "D4", "Q8", "A4"].map(String::from));
    let mut pairs = 0usize;
    for name in &names {
        let g = preset(name).unwrap();
        assert!(g.order() <= 12);
        let h = algebra(&g);
        let oracle = subgroup_oracle(&g);
        let subs: Vec<SubHopf> = oracle
            .subgroups
            .iter()
            .map(|s| subgroup(&h, &g, s))
            .collect();
        for a in &subs {
            for b in &subs {
                let report = check_dimension_formula(&h, a, b).unwrap();
                assert!(report.passed(), "{name}: {report}");
                pairs += 1;
            }
        }
    }
    println!("[criterion 03] PASS dimension formula on {pairs} subgroup pairs");
}

#[test]
fn acceptance_04_smash_flagship() {
    let s3 = symmetric3();
    let h = algebra(&s3);
    let a = subgroup(&h, &s3, &[0, 1, 2]);
    let l = subgroup(&h, &s3, &[0, 3]);
    let phi = smash_factor_iso(&h, &a, &l).unwrap();
    // Verified Hopf isomorphism kC3 # kC2 → kS3: the algebra-map check runs
    // over all 36 basis products, and the codomain is all of kS3.
    assert!(phi.is_algebra_map && phi.is_coalgebra_map && phi.commutes_with_antipode);
    assert!(phi.is_bijective());
    assert_eq!(phi.domain.dim(), 6);
    assert_eq!(phi.codomain.dim(), 6);
    println!("[criterion 04] PASS kC3 # kC2 ≅ kS3 as Hopf algebras");
}

#[test]
fn acceptance_05_normal_factor_isos() {
    // kC6 = kC2 · kC3.
    let c6 = cyclic(6);
    let h6 = algebra(&c6);
    let a = subgroup(&h6, &c6, &[0, 3]);
    let l = subgroup(&h6, &c6, &[0, 2, 4]);
    assert!(normal_factor_iso(&h6, &a, &l).unwrap().is_isomorphism());
    // Klein four = kC2 · kC2′.
    let v4 = preset("Klein4").unwrap();
    let hv = algebra(&v4);
    let a = subgroup(&hv, &v4, &[0, 1]);
    let b = subgroup(&hv, &v4, &[0, 2]);
    assert!(normal_factor_iso(&hv, &a, &b).unwrap().is_isomorphism());
    // Elementwise commutation on all basis pairs is part of the verification;
    // re-check it explicitly here.
    for (x, y) in [(1usize, 2usize), (3, 2), (1, 3)] {
        let ex = hopfact_core::exact::vecops::basis(4, x);
        let ey = hopfact_core::exact::vecops::basis(4, y);
        assert_eq!(hv.mul_vec(&ex, &ey), hv.mul_vec(&ey, &ex));
    }
    println!("[criterion 05] PASS normal factorizations give tensor products");
}

#[test]
fn acceptance_06_projection_pairs() {
    let c6 = cyclic(6);
    let h = algebra(&c6);
    let a = subgroup(&h, &c6, &[0, 3]);
    let l = subgroup(&h, &c6, &[0, 2, 4]);
    let f = is_factorization(&h, &a, &l).unwrap();
    let pair = projections_from_factorization(&f).unwrap();
    let props = projection_properties(&h, &pair.pi1.matrix, &pair.pi2.matrix);
    assert!(props.passed(), "{props}");
    assert_eq!(props.checks.len(), 5, "all five properties reported");
    // Round trip 1: factorization → projections → factorization.
    let back = factorization_from_projections(&h, &pair.pi1.matrix, &pair.pi2.matrix).unwrap();
    assert_eq!(back.a.space(), a.space());
    assert_eq!(back.l.space(), l.space());
    // Round trip 2: projections → factorization → projections.
    let pair2 = projections_from_factorization(&back).unwrap();
    assert_eq!(pair2.pi1.matrix, pair.pi1.matrix);
    assert_eq!(pair2.pi2.matrix, pair.pi2.matrix);
    println!("[criterion 06] PASS projection pair properties and both round trips on kC6");
}

#[test]
fn acceptance_07_matched_pair_round_trip() {
    // (kC3, kC2) inside kS3.
    let s3 = symmetric3();
    let hs = algebra(&s3);
    let a = subgroup(&hs, &s3, &[0, 1, 2]);
    let l = subgroup(&hs, &s3, &[0, 3]);
    assert!(a.is_normal());
    let mp = extract_matched_pair(&hs, &a, &l).unwrap();
    let trivial = MatchedPair::trivial(a.induced().clone(), l.induced().clone());
    assert_eq!(mp.act_l, trivial.act_l, "◁ must be trivial for normal A");
    assert!(rebuild_and_compare(&hs, &a, &l).unwrap().is_isomorphism());

    // (kC4, kC2) inside kD4.
    let d4 = dihedral(4);
    let hd = algebra(&d4);
    let c4 = subgroup(&hd, &d4, &[0, 1, 2, 3]);
    let c2 = subgroup(&hd, &d4, &[0, 4]);
    assert!(c4.is_normal());
    let mp = extract_matched_pair(&hd, &c4, &c2).unwrap();
    let trivial = MatchedPair::trivial(c4.induced().clone(), c2.induced().clone());
    assert_eq!(mp.act_l, trivial.act_l, "◁ must be trivial for normal A");
    assert!(rebuild_and_compare(&hd, &c4, &c2).unwrap().is_isomorphism());

    // A non-normal left factor produces a nontrivial ◁: (kC2, kC3) in kS3.
    let c2s = subgroup(&hs, &s3, &[0, 3]);
    let c3s = subgroup(&hs, &s3, &[0, 1, 2]);
    assert!(!c2s.is_normal());
    let mp = extract_matched_pair(&hs, &c2s, &c3s).unwrap();
    let trivial = MatchedPair::trivial(c2s.induced().clone(), c3s.induced().clone());
    assert_ne!(mp.act_l, trivial.act_l, "◁ must be nontrivial here");
    assert!(rebuild_and_compare(&hs, &c2s, &c3s).unwrap().is_isomorphism());
    println!("[criterion 07] PASS matched-pair extraction and bicrossed rebuild round trips");
}

#[test]
fn acceptance_08_socles() {
    let s3 = symmetric3();
    let hs = algebra(&s3);
    let (soc, dec) = socle(&hs).unwrap();
    assert_eq!(soc.dim(), 3);
    assert_eq!(soc.space(), &span_of_elements(6, &[0, 1, 2]));
    assert_eq!(dec.factors.len(), 1);

    let d4 = dihedral(4);
    let hd = algebra(&d4);
    let (soc, _) = socle(&hd).unwrap();
    assert_eq!(soc.dim(), 2);
    assert_eq!(soc.space(), &span_of_elements(8, &[0, 2]), "socle of kD4 is its center");

    let q8 = preset("Q8").unwrap();
    let hq = algebra(&q8);
    let (soc, _) = socle(&hq).unwrap();
    assert_eq!(soc.dim(), 2);

    let c6 = cyclic(6);
    let hc = algebra(&c6);
    let (soc, dec) = socle(&hc).unwrap();
    assert!(soc.is_full());
    let dims: Vec<usize> = dec.factors.iter().map(SubHopf::dim).collect();
    assert_eq!(dims, vec![2, 3]);
    assert!(dec.iso.is_isomorphism());
    println!("[criterion 08] PASS socle computations for kS3, kD4, kQ8, kC6");
}

#[test]
fn acceptance_09_ksr() {
    let _g = lock();
    let c30 = cyclic(30);
    let h = algebra(&c30);
    let KsrOutcome::Decomposed(d) = ksr_decompose(&h).unwrap() else {
        panic!("kC30 is completely reducible");
    };
    let dims: Vec<usize> = d.factors.iter().map(SubHopf::dim).collect();
    assert_eq!(dims, vec![2, 3, 5]);
    assert!(d.iso.is_isomorphism());
    // Reversed minimal-normal ordering matches under the uniqueness check.
    let KsrOutcome::Decomposed(d2) = ksr_decompose_ordered(&h, true).unwrap() else {
        panic!("reversed order decomposes too");
    };
    let matching = ksr_uniqueness_check(&d, &d2).unwrap();
    assert_eq!(matching.permutation.len(), 3);
    for iso in &matching.isos {
        assert!(iso.is_isomorphism());
    }
    // Obstruction witnesses.
    let hs = algebra(&symmetric3());
    match ksr_decompose(&hs).unwrap() {
        KsrOutcome::NotCompletelyReducible(KsrObstruction::SocleProper { socle }) => {
            assert_eq!(socle.dim(), 3)
        }
        other => panic!("expected a socle witness for kS3, got {other:?}"),
    }
    let hd = algebra(&dihedral(4));
    match ksr_decompose(&hd).unwrap() {
        KsrOutcome::NotCompletelyReducible(KsrObstruction::SocleProper { socle }) => {
            assert_eq!(socle.dim(), 2)
        }
        other => panic!("expected a socle witness for kD4, got {other:?}"),
    }
    println!("[criterion 09] PASS KSR decomposition, uniqueness, and obstruction witnesses");
}

#[test]
fn acceptance_10_normal_inside_cr() {
    let _g = lock();
    let c30 = cyclic(30);
    let h = algebra(&c30);
    let KsrOutcome::Decomposed(d) = ksr_decompose(&h).unwrap() else {
        panic!("kC30 decomposes");
    };
    let k = subgroup(&h, &c30, &[0, 5, 10, 15, 20, 25]); // kC6
    let (p, iso) = normal_inside_cr(&h, &k, &d).unwrap();
    assert_eq!(p.len(), 2);
    assert!(iso.is_isomorphism());
    println!("[criterion 10] PASS kC6 located inside the KSR decomposition of kC30");
}

#[test]
fn acceptance_11_lattice_duality() {
    let _g = lock();
    for name in ["S3", "D4", "Q8"] {
        let g = preset(name).unwrap();
        let h = algebra(&g);
        let report = verify_lattice_duality(&h).unwrap();
        assert!(report.passed(), "{name}: {report}");
    }
    println!("[criterion 11] PASS lattice duality for kS3, kD4, kQ8");
}

#[test]
fn acceptance_12_performance_envelope() {
    let _g = lock();
    let dir = tempfile::tempdir().unwrap();
    let run = |args: &[&str], budget: Duration, expect_code: i32| -> Duration {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_hopfact"))
            .args(args)
            .current_dir(dir.path())
            .output()
            .expect("binary runs");
        let elapsed = start.elapsed();
        assert_eq!(
            out.status.code(),
            Some(expect_code),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
        assert!(
            elapsed < budget,
            "{args:?} took {elapsed:?}, budget {budget:?}"
        );
        elapsed
    };
    let five = Duration::from_secs(5);
    // A dimension-16 input: k(C2 × D4).
    run(
        &["build", "--preset", "C2xD4", "--group-algebra", "-o", "g16.json"],
        five,
        0,
    );
    run(&["verify", "g16.json"], five, 0);
    run(&["dual", "g16.json", "-o", "g16d.json"], five, 0);
    run(&["lattice", "g16.json"], five, 0);
    run(&["socle", "g16.json"], five, 0);
    run(&["ksr", "g16.json"], five, 0);
    let mut duality_time = run(&["duality", "g16.json"], five, 0);
    // Element indices in C2 × D4: (c, d) ↦ 8c + d.
    run(
        &[
            "factorize",
            "g16.json",
            "--a-indices",
            "0,1,2,3,8,9,10,11",
            "--l-indices",
            "0,4",
        ],
        five,
        0,
    );
    run(
        &[
            "projections",
            "g16.json",
            "--a-indices",
            "0,8",
            "--l-indices",
            "0,1,2,3,4,5,6,7",
        ],
        five,
        0,
    );
    run(
        &[
            "dimcheck",
            "g16.json",
            "--a-indices",
            "0,1,2,3",
            "--l-indices",
            "0,4",
        ],
        five,
        0,
    );
    // Axiom verification at dimension 60 stays under a minute.
    run(
        &["build", "--preset", "C2xC30", "--group-algebra", "-o", "g60.json"],
        Duration::from_secs(60),
        0,
    );
    let verify_60 = run(&["verify", "g60.json"], Duration::from_secs(60), 0);
    duality_time = duality_time.max(verify_60);
    println!(
        "[criterion 12] PASS performance envelope (slowest measured step {duality_time:?})"
    );
}
