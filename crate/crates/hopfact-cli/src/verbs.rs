//! One function per CLI verb. File-system and parse problems become usage
//! errors (exit 2); mathematical findings become failed checks (exit 1).

use std::path::Path;
use std::sync::Arc;

use serde_json::json;

use hopfact_core::error::Error;
use hopfact_core::exact::Subspace;
use hopfact_core::format::{GroupFile, HopfFile, MatchedPairFile, SubspaceFile};
use hopfact_core::groups::{dual_group_algebra, group_algebra, preset, span_of_elements};
use hopfact_core::hopf::HopfAlgebra;
use hopfact_core::report::Check;
use hopfact_core::structure::{
    check_dimension_formula, complement_quotient_iso, enumerate_normal_lattice,
    factorization_from_projections, is_factorization, ksr_decompose, normal_factor_iso,
    projection_properties, projections_from_factorization, smash_factor_iso,
    socle as socle_of, verify_lattice_duality, FactorizationKind, KsrObstruction, KsrOutcome,
};
use hopfact_core::subobjects::SubHopf;

use crate::output::CliReport;
use crate::PairArgs;

pub struct UsageError(pub String);

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(format!("io error: {e}"))
    }
}

type VerbResult = Result<CliReport, UsageError>;

fn load_hopf(report: &mut CliReport, path: &Path) -> Result<Arc<HopfAlgebra>, UsageError> {
    let bytes = std::fs::read(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    report.add_input(path, &bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| UsageError(format!("{} is not UTF-8", path.display())))?;
    let file = HopfFile::from_json(&text).map_err(|e| UsageError(e.to_string()))?;
    let algebra = file.to_algebra().map_err(|e| UsageError(e.to_string()))?;
    Ok(Arc::new(algebra))
}

/// Push the axiom verdicts; returns whether all passed.
fn check_axioms(report: &mut CliReport, h: &HopfAlgebra) -> bool {
    let axioms = h.verify_axioms();
    report.extend(axioms.to_report());
    axioms.all_pass()
}

fn check_semisimple(report: &mut CliReport, h: &HopfAlgebra) -> bool {
    let ok = h.is_semisimple();
    report.push(Check::of(
        "input is semisimple",
        ok,
        "counit vanishes on the left-integral space",
    ));
    ok
}

/// Resolve one side of a subalgebra pair into a verified SubHopf, recording
/// the verification as a check. `None` means the check failed.
fn resolve_side(
    report: &mut CliReport,
    h: &Arc<HopfAlgebra>,
    name: &str,
    indices: &Option<Vec<usize>>,
    basis: &Option<std::path::PathBuf>,
) -> Result<Option<SubHopf>, UsageError> {
    let space: Subspace = match (indices, basis) {
        (Some(idx), None) => {
            for &i in idx {
                if i >= h.dim() {
                    return Err(UsageError(format!(
                        "{name}: index {i} out of range for dimension {}",
                        h.dim()
                    )));
                }
            }
            span_of_elements(h.dim(), idx)
        }
        (None, Some(path)) => {
            let bytes = std::fs::read(path)
                .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
            report.add_input(path, &bytes);
            let text = String::from_utf8(bytes)
                .map_err(|_| UsageError(format!("{} is not UTF-8", path.display())))?;
            let file = SubspaceFile::from_json(&text).map_err(|e| UsageError(e.to_string()))?;
            let space = file.to_subspace().map_err(|e| UsageError(e.to_string()))?;
            if space.ambient_dim() != h.dim() {
                return Err(UsageError(format!(
                    "{name}: ambient dimension {} does not match |H| = {}",
                    space.ambient_dim(),
                    h.dim()
                )));
            }
            space
        }
        _ => {
            return Err(UsageError(format!(
                "{name}: provide exactly one of --{0}-indices or --{0}-basis",
                name.to_lowercase()
            )))
        }
    };
    match SubHopf::new(h, space) {
        Ok(sub) => {
            report.push(Check::pass(format!("{name} is a Hopf subalgebra")));
            Ok(Some(sub))
        }
        Err(e) => {
            report.push(Check::fail(format!("{name} is a Hopf subalgebra"), e.to_string()));
            Ok(None)
        }
    }
}

fn resolve_pair(
    report: &mut CliReport,
    h: &Arc<HopfAlgebra>,
    pair: &PairArgs,
) -> Result<Option<(SubHopf, SubHopf)>, UsageError> {
    let a = resolve_side(report, h, "A", &pair.a_indices, &pair.a_basis)?;
    let l = resolve_side(report, h, "L", &pair.l_indices, &pair.l_basis)?;
    Ok(a.zip(l))
}

fn subspace_rows(s: &Subspace) -> serde_json::Value {
    json!(SubspaceFile::from_subspace(s).rows)
}

// ---------------------------------------------------------------------------
// Verbs
// ---------------------------------------------------------------------------

pub fn verify(input: &Path) -> VerbResult {
    let mut report = CliReport::new("verify");
    let h = load_hopf(&mut report, input)?;
    let all_pass = check_axioms(&mut report, &h);
    let mut data = json!({ "dim": h.dim() });
    if all_pass {
        data["commutative"] = json!(h.is_commutative());
        data["cocommutative"] = json!(h.is_cocommutative());
        data["semisimple"] = json!(h.is_semisimple());
    }
    report.data = data;
    Ok(report)
}

pub fn dual(input: &Path, output: &Path) -> VerbResult {
    let mut report = CliReport::new("dual");
    let h = load_hopf(&mut report, input)?;
    if !check_axioms(&mut report, &h) {
        return Ok(report);
    }
    let d = h.dual();
    report.push(Check::of(
        "dual passes the axiom suite",
        d.verify_axioms().all_pass(),
        "dual of a valid Hopf algebra must be valid",
    ));
    report.push(Check::of(
        "double dual equals the input",
        d.dual() == *h,
        "canonical identification failed",
    ));
    if report.passed {
        std::fs::write(output, HopfFile::from_algebra(&d).to_json())?;
    }
    report.data = json!({ "dim": d.dim(), "output": output.display().to_string() });
    Ok(report)
}

pub fn lattice(input: &Path) -> VerbResult {
    let mut report = CliReport::new("lattice");
    let h = load_hopf(&mut report, input)?;
    if !check_axioms(&mut report, &h) {
        return Ok(report);
    }
    if !check_semisimple(&mut report, &h) {
        return Ok(report);
    }
    match enumerate_normal_lattice(&h) {
        Ok(lat) => {
            report.push(Check::pass("normal Hopf subalgebra lattice enumerated"));
            let elements: Vec<_> = lat
                .elements
                .iter()
                .map(|e| json!({ "dim": e.dim(), "basis": subspace_rows(e.space()) }))
                .collect();
            report.data = json!({
                "count": lat.len(),
                "dims": lat.dims(),
                "elements": elements,
                "containment": lat.leq,
                "atoms": lat.atoms,
                "bottom": lat.bottom,
                "top": lat.top,
            });
        }
        Err(e) => report.push(Check::fail("normal Hopf subalgebra lattice enumerated", e.to_string())),
    }
    Ok(report)
}

pub fn socle(input: &Path) -> VerbResult {
    let mut report = CliReport::new("socle");
    let h = load_hopf(&mut report, input)?;
    if !check_axioms(&mut report, &h) {
        return Ok(report);
    }
    if !check_semisimple(&mut report, &h) {
        return Ok(report);
    }
    match socle_of(&h) {
        Ok((socle, decomposition)) => {
            report.push(Check::pass("socle computed"));
            report.push(Check::of(
                "socle decomposes as the tensor product of minimal normals",
                decomposition.iso.is_isomorphism(),
                "iterated multiplication map failed verification",
            ));
            report.data = json!({
                "socle_dim": socle.dim(),
                "socle_basis": subspace_rows(socle.space()),
                "factor_dims": decomposition.factors.iter().map(SubHopf::dim).collect::<Vec<_>>(),
                "socle_is_whole_algebra": socle.is_full(),
            });
        }
        Err(e) => report.push(Check::fail("socle computed", e.to_string())),
    }
    Ok(report)
}

pub fn ksr(input: &Path) -> VerbResult {
    let mut report = CliReport::new("ksr");
    let h = load_hopf(&mut report, input)?;
    if !check_axioms(&mut report, &h) {
        return Ok(report);
    }
    if !check_semisimple(&mut report, &h) {
        return Ok(report);
    }
    match ksr_decompose(&h) {
        Ok(KsrOutcome::Decomposed(d)) => {
            report.push(Check::pass("Krull-Schmidt-Remak decomposition computed"));
            report.push(Check::of(
                "decomposition isomorphism verified",
                d.iso.is_isomorphism(),
                "tensor product map failed verification",
            ));
            report.data = json!({
                "completely_reducible": true,
                "factor_dims": d.factors.iter().map(SubHopf::dim).collect::<Vec<_>>(),
            });
        }
        Ok(KsrOutcome::NotCompletelyReducible(witness)) => {
            report.push(Check::pass("Krull-Schmidt-Remak analysis completed"));
            let witness_json = match witness {
                KsrObstruction::SocleProper { socle } => json!({
                    "kind": "socle_proper",
                    "socle_dim": socle.dim(),
                    "socle_basis": subspace_rows(socle.space()),
                }),
                KsrObstruction::NonSimpleFactor { index, factor } => json!({
                    "kind": "non_simple_factor",
                    "index": index,
                    "factor_dim": factor.dim(),
                }),
            };
            report.data = json!({
                "completely_reducible": false,
                "witness": witness_json,
            });
        }
        Err(e) => report.push(Check::fail("Krull-Schmidt-Remak analysis completed", e.to_string())),
    }
    Ok(report)
}

pub fn factorize(input: &Path, pair: &PairArgs) -> VerbResult {
    let mut report = CliReport::new("factorize");
    let h = load_hopf(&mut report, input)?;
    if !check_axioms(&mut report, &h) {
        return Ok(report);
    }
    let Some((a, l)) = resolve_pair(&mut report, &h, pair)? else {
        return Ok(report);
    };
    let f = match is_factorization(&h, &a, &l) {
        Ok(f) => {
            report.push(Check::pass("(A, L) is a factorization of H"));
            f
        }
        Err(e) => {
            report.push(Check::fail("(A, L) is a factorization of H", e.to_string()));
            return Ok(report);
        }
    };
    let mut data = json!({
        "kind": f.kind.name(),
        "a_dim": a.dim(),
        "l_dim": l.dim(),
        "a_normal": a.is_normal(),
        "l_normal": l.is_normal(),
    });
    match hopfact_core::products::extract_matched_pair(&h, &a, &l) {
        Ok(mp) => {
            report.push(Check::pass("matched pair extracted and validated"));
            data["matched_pair"] = serde_json::to_value(MatchedPairFile::from_matched_pair(&mp))
                .expect("matched pair serialization");
        }
        Err(e) => report.push(Check::fail("matched pair extracted and validated", e.to_string())),
    }
    match hopfact_core::products::rebuild_and_compare(&h, &a, &l) {
        Ok(_) => report.push(Check::pass(
            "bicrossed rebuild is isomorphic to H via the multiplication map",
        )),
        Err(e) => report.push(Check::fail(
            "bicrossed rebuild is isomorphic to H via the multiplication map",
            e.to_string(),
        )),
    }
    if f.kind != FactorizationKind::General {
        match smash_factor_iso(&h, &a, &l) {
            Ok(_) => report.push(Check::pass("smash product A#L ≅ AL verified")),
            Err(e) => report.push(Check::fail("smash product A#L ≅ AL verified", e.to_string())),
        }
        match complement_quotient_iso(&h, &a, &l) {
            Ok(_) => report.push(Check::pass("L ≅ H//A verified")),
            Err(e) => report.push(Check::fail("L ≅ H//A verified", e.to_string())),
        }
    }
    if f.kind == FactorizationKind::Normal {
        match normal_factor_iso(&h, &a, &l) {
            Ok(_) => report.push(Check::pass("H ≅ A ⊗ L verified")),
            Err(e) => report.push(Check::fail("H ≅ A ⊗ L verified", e.to_string())),
        }
    }
    report.data = data;
    Ok(report)
}

pub fn projections(input: &Path, pair: &PairArgs) -> VerbResult {
    let mut report = CliReport::new("projections");
    let h = load_hopf(&mut report, input)?;
    if !check_axioms(&mut report, &h) {
        return Ok(report);
    }
    let Some((a, l)) = resolve_pair(&mut report, &h, pair)? else {
        return Ok(report);
    };
    let f = match is_factorization(&h, &a, &l) {
        Ok(f) => f,
        Err(e) => {
            report.push(Check::fail("(A, L) is a factorization of H", e.to_string()));
            return Ok(report);
        }
    };
    report.push(Check::pass("(A, L) is a factorization of H"));
    report.push(Check::of(
        "factorization is normal",
        f.kind == FactorizationKind::Normal,
        format!("kind is {}", f.kind.name()),
    ));
    if f.kind != FactorizationKind::Normal {
        return Ok(report);
    }
    let p = match projections_from_factorization(&f) {
        Ok(p) => p,
        Err(e) => {
            report.push(Check::fail("projection pair construction", e.to_string()));
            return Ok(report);
        }
    };
    report.extend(projection_properties(&h, &p.pi1.matrix, &p.pi2.matrix));
    // Round trip: factorization → projections → factorization.
    match factorization_from_projections(&h, &p.pi1.matrix, &p.pi2.matrix) {
        Ok(back) => {
            report.push(Check::of(
                "projections recover the factorization",
                back.a.space() == a.space() && back.l.space() == l.space(),
                "recovered subalgebras differ",
            ));
            match projections_from_factorization(&back) {
                Ok(p2) => report.push(Check::of(
                    "factorization recovers the projections",
                    p2.pi1.matrix == p.pi1.matrix && p2.pi2.matrix == p.pi2.matrix,
                    "recovered projections differ",
                )),
                Err(e) => report.push(Check::fail("factorization recovers the projections", e.to_string())),
            }
        }
        Err(e) => report.push(Check::fail("projections recover the factorization", e.to_string())),
    }
    report.data = json!({ "a_dim": a.dim(), "l_dim": l.dim() });
    Ok(report)
}

pub fn duality(input: &Path) -> VerbResult {
    let mut report = CliReport::new("duality");
    let h = load_hopf(&mut report, input)?;
    if !check_axioms(&mut report, &h) {
        return Ok(report);
    }
    if !check_semisimple(&mut report, &h) {
        return Ok(report);
    }
    match verify_lattice_duality(&h) {
        Ok(r) => report.extend(r),
        Err(e) => report.push(Check::fail("lattice duality verified", e.to_string())),
    }
    Ok(report)
}

pub fn dimcheck(input: &Path, pair: &PairArgs) -> VerbResult {
    let mut report = CliReport::new("dimcheck");
    let h = load_hopf(&mut report, input)?;
    if !check_axioms(&mut report, &h) {
        return Ok(report);
    }
    if !check_semisimple(&mut report, &h) {
        return Ok(report);
    }
    let Some((a, l)) = resolve_pair(&mut report, &h, pair)? else {
        return Ok(report);
    };
    match check_dimension_formula(&h, &a, &l) {
        Ok(r) => report.extend(r),
        Err(e) => report.push(Check::fail("dimension formula", e.to_string())),
    }
    report.data = json!({ "a_dim": a.dim(), "l_dim": l.dim() });
    Ok(report)
}

#[allow(clippy::fn_params_excessive_bools)]
pub fn build(
    preset_name: Option<&str>,
    group_file: Option<&Path>,
    group_algebra_flag: bool,
    dual_flag: bool,
    output: &Path,
) -> VerbResult {
    let mut report = CliReport::new("build");
    if group_algebra_flag == dual_flag {
        return Err(UsageError(
            "choose exactly one of --group-algebra or --dual-group-algebra".into(),
        ));
    }
    let group = match (preset_name, group_file) {
        (Some(name), None) => preset(name)
            .ok_or_else(|| UsageError(format!("unknown preset {name:?}")))?,
        (None, Some(path)) => {
            let bytes = std::fs::read(path)
                .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
            report.add_input(path, &bytes);
            let text = String::from_utf8(bytes)
                .map_err(|_| UsageError(format!("{} is not UTF-8", path.display())))?;
            GroupFile::from_json(&text)
                .and_then(|f| f.to_group())
                .map_err(|e| UsageError(e.to_string()))?
        }
        _ => {
            return Err(UsageError(
                "provide exactly one of --preset or --group-file".into(),
            ))
        }
    };
    let algebra = if group_algebra_flag {
        group_algebra(&group)
    } else {
        dual_group_algebra(&group)
    };
    report.push(Check::of(
        "constructed algebra passes the axiom suite",
        algebra.verify_axioms().all_pass(),
        "construction bug",
    ));
    if report.passed {
        std::fs::write(output, HopfFile::from_algebra(&algebra).to_json())?;
    }
    report.data = json!({
        "order": group.order(),
        "dim": algebra.dim(),
        "kind": if group_algebra_flag { "group_algebra" } else { "dual_group_algebra" },
        "preset": preset_name,
        "output": output.display().to_string(),
    });
    Ok(report)
}

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}
