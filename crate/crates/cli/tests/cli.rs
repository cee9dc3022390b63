//! End-to-end tests of the `dcl` binary: exit codes, JSON shapes, and
//! cross-command consistency.

use std::path::Path;
use std::process::{Command, Output};

fn dcl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn dcl_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcl"))
        .args(args)
        .env("DCL_OUT_DIR", dir)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn catalog_r1_reports_counts() {
    let out = dcl(&["catalog", "--r", "1", "--format", "json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["counts"]["total"], 24 * 1429 + 7993);
    assert_eq!(v["counts"]["tenChord"], 1429 - 799);
    assert_eq!(v["params"]["t"], 1429);
}

#[test]
fn catalog_even_t_exits_2() {
    let out = dcl(&["catalog", "--t", "1430"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("even"));
}

#[test]
fn catalog_needs_exactly_one_of_r_t() {
    assert_eq!(dcl(&["catalog"]).status.code(), Some(2));
    assert_eq!(
        dcl(&["catalog", "--r", "1", "--t", "1429"]).status.code(),
        Some(2)
    );
}

#[test]
fn catalog_relaxed_boundary() {
    assert!(dcl(&["catalog", "--t", "801", "--relaxed"])
        .status
        .success());
    // 799 leaves the ten-chord family empty
    assert_eq!(
        dcl(&["catalog", "--t", "799", "--relaxed"]).status.code(),
        Some(2)
    );
    // non-canonical t without --relaxed
    assert_eq!(dcl(&["catalog", "--t", "801"]).status.code(), Some(2));
}

#[test]
fn verify_r1_passes_with_expected_gains() {
    let out = dcl(&["verify", "--r", "1", "--format", "json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["edgeGain"], 51444);
    assert_eq!(v["verdict"], "distinct");
    assert_eq!(v["table"]["matches"], 66);

    let out = dcl(&["verify", "--r", "1", "--mode", "simple", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["edgeGain"], 51442);
}

#[test]
fn verify_collision_instance_exits_1_with_report() {
    // t = 907 is a relaxed instance where two ten-chord length rows
    // coincide; the audit must fail with the colliding sources listed
    let out = dcl(&["verify", "--t", "907", "--relaxed", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["verdict"], "collisions");
    let collisions = v["collisions"].as_array().unwrap();
    assert!(!collisions.is_empty());
    assert_eq!(v["passed"], false);
    // the accounting identity still holds; only distinctness fails
    assert_eq!(v["edgeGainOk"], true);
}

#[test]
fn export_is_deterministic_and_loadable() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dcl_in(
        dir.path(),
        &["export", "--t", "1429", "--subgraph", "38584"],
    );
    assert!(out1.status.success());
    let v1 = json_of(&out1);
    let path1 = v1["path"].as_str().unwrap().to_string();
    let bytes1 = std::fs::read(&path1).unwrap();

    let out2 = dcl_in(
        dir.path(),
        &[
            "export",
            "--t",
            "1429",
            "--subgraph",
            "38584",
            "--output",
            "again.txt",
        ],
    );
    assert!(out2.status.success());
    let v2 = json_of(&out2);
    assert_eq!(v1["summary"]["checksum"], v2["summary"]["checksum"]);
    let bytes2 = std::fs::read(dir.path().join("again.txt")).unwrap();
    assert_eq!(bytes1, bytes2);

    // the oracle agrees with the analytic 66-cycle content
    let out = dcl(&["oracle", "--input", &path1, "--format", "json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["spectrum"]["cycleCount"], 66);
    assert_eq!(v["verdict"]["distinct"], "yes");
}

#[test]
fn export_rejects_unlisted_index() {
    // 25t sits in the gap between the family bands and 26t
    let dir = tempfile::tempdir().unwrap();
    let out = dcl_in(
        dir.path(),
        &["export", "--t", "1429", "--subgraph", "35725"],
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not in the catalog"));
}

#[test]
fn oracle_fixture_and_extremal() {
    let out = dcl(&["oracle", "--fixture", "k4", "--format", "json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["verdict"]["distinct"], "no");
    assert_eq!(v["verdict"]["length"], 3);

    let out = dcl(&["oracle", "--fn", "3", "--format", "json"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["extremal"]["maxEdges"], 3);
    assert_eq!(v["extremal"]["exhaustive"], true);

    let out = dcl(&["oracle", "--fn", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_reads_hand_made_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.txt");
    std::fs::write(&path, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let out = dcl(&[
        "oracle",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["spectrum"]["cycleCount"], 7);
    assert_eq!(v["verdict"]["distinct"], "no");
}

#[test]
fn oracle_cap_flags_truncation() {
    let out = dcl(&[
        "oracle",
        "--fixture",
        "k4",
        "--cap",
        "2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["spectrum"]["truncated"], true);
    assert_eq!(v["verdict"]["distinct"], "unknown");
}
