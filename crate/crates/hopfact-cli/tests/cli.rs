//! End-to-end CLI behavior: exit codes, file formats, and output stability.

use std::path::Path;
use std::process::{Command, Output};

fn hopfact(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfact"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn build_then_lattice_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let out = hopfact(
        &["build", "--preset", "S3", "--group-algebra", "-o", "s3.json"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = hopfact(&["lattice", "s3.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"count\": 3") || text.contains("count"), "{text}");
    assert!(text.contains("result: PASS"));
}

#[test]
fn factorize_reports_kind_and_smash_iso() {
    let dir = tempfile::tempdir().unwrap();
    hopfact(
        &["build", "--preset", "S3", "--group-algebra", "-o", "s3.json"],
        dir.path(),
    );
    let out = hopfact(
        &[
            "factorize",
            "s3.json",
            "--a-indices",
            "0,1,2",
            "--l-indices",
            "0,3",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("half_normal"), "{text}");
    assert!(text.contains("ok   smash product A#L ≅ AL verified"), "{text}");
}

#[test]
fn corrupted_antipode_exits_one_with_axiom_and_index() {
    let dir = tempfile::tempdir().unwrap();
    hopfact(
        &["build", "--preset", "C2", "--group-algebra", "-o", "c2.json"],
        dir.path(),
    );
    // Zero out the antipode on the non-identity grouplike.
    let path = dir.path().join("c2.json");
    let mut file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    file["antipode"] = serde_json::json!([[0, 0, "1"]]);
    std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();

    let out = hopfact(&["verify", "c2.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL antipode"), "{text}");
    assert!(text.contains("[1]"), "missing basis index: {text}");
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("junk.json"), "{not json").unwrap();
    let out = hopfact(&["verify", "junk.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    // Unknown verbs are rejected before any computation, also with exit 2.
    let out = hopfact(&["frobnicate", "junk.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    // Missing required pair arguments.
    hopfact(
        &["build", "--preset", "C6", "--group-algebra", "-o", "c6.json"],
        dir.path(),
    );
    let out = hopfact(&["factorize", "c6.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    // Unknown preset.
    let out = hopfact(
        &["build", "--preset", "E8", "--group-algebra", "-o", "x.json"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn structured_output_is_stable_and_covered_by_text() {
    let dir = tempfile::tempdir().unwrap();
    hopfact(
        &["build", "--preset", "C6", "--group-algebra", "-o", "c6.json"],
        dir.path(),
    );
    let run1 = hopfact(&["--format", "json", "socle", "c6.json"], dir.path());
    let run2 = hopfact(&["--format", "json", "socle", "c6.json"], dir.path());
    assert_eq!(stdout(&run1), stdout(&run2), "structured output must be stable");

    let json: serde_json::Value = serde_json::from_str(&stdout(&run1)).unwrap();
    assert_eq!(json["schema"], "hopfact.report/v1");
    assert!(json["version"].is_string());
    assert!(json["inputs"][0]["sha256"].is_string());

    // Every assertion verdict in the structured output appears in the text.
    let text_run = hopfact(&["socle", "c6.json"], dir.path());
    let text = stdout(&text_run);
    for check in json["checks"].as_array().unwrap() {
        let name = check["name"].as_str().unwrap();
        assert!(text.contains(name), "text output missing check {name:?}");
    }
}

#[test]
fn dual_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    hopfact(
        &["build", "--preset", "S3", "--group-algebra", "-o", "s3.json"],
        dir.path(),
    );
    let out = hopfact(&["dual", "s3.json", "-o", "ds3.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let out = hopfact(&["verify", "ds3.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    // Dual of the dual is the original file content (canonical ordering).
    let out = hopfact(&["dual", "ds3.json", "-o", "dds3.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let original = std::fs::read_to_string(dir.path().join("s3.json")).unwrap();
    let doubled = std::fs::read_to_string(dir.path().join("dds3.json")).unwrap();
    assert_eq!(original, doubled);
}

#[test]
fn dimcheck_accepts_subspace_files() {
    let dir = tempfile::tempdir().unwrap();
    hopfact(
        &["build", "--preset", "S3", "--group-algebra", "-o", "s3.json"],
        dir.path(),
    );
    let basis = serde_json::json!({
        "ambient_dim": 6,
        "rows": [
            ["1", "0", "0", "0", "0", "0"],
            ["0", "1", "0", "0", "0", "0"],
            ["0", "0", "1", "0", "0", "0"]
        ]
    });
    std::fs::write(dir.path().join("a3.json"), basis.to_string()).unwrap();
    let out = hopfact(
        &[
            "dimcheck",
            "s3.json",
            "--a-basis",
            "a3.json",
            "--l-indices",
            "0,3",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("|LA| = |L||A|/|L∩A|"));
}

#[test]
fn group_file_input_works() {
    let dir = tempfile::tempdir().unwrap();
    // C3 as an explicit Cayley table.
    let group = serde_json::json!({
        "order": 3,
        "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]],
        "names": ["e", "g", "g2"]
    });
    std::fs::write(dir.path().join("c3.json"), group.to_string()).unwrap();
    let out = hopfact(
        &[
            "build",
            "--group-file",
            "c3.json",
            "--dual-group-algebra",
            "-o",
            "dc3.json",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = hopfact(&["verify", "dc3.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    // A broken table is rejected with exit 2 and a located error.
    let broken = serde_json::json!({
        "order": 3,
        "table": [[0, 1, 2], [1, 2, 0], [2, 0, 7]]
    });
    std::fs::write(dir.path().join("bad.json"), broken.to_string()).unwrap();
    let out = hopfact(
        &[
            "build",
            "--group-file",
            "bad.json",
            "--group-algebra",
            "-o",
            "x.json",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("row 2"), "{err}");
}
