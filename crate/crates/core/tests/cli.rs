use std::path::{Path, PathBuf};
use std::process::Command;

use ordtop::zoo::curated::shipped_claims;
use serde_json::Value;

fn ordtop(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ordtop")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let report = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), report, String::from_utf8(out.stderr).unwrap())
}

fn claims_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../claims")
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn shipped_claim_files_match_the_builtin_certificates() {
    for (stem, claim) in shipped_claims() {
        let path = claims_dir().join(format!("{stem}.json"));
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, claim.to_json(), "{stem}");
    }
}

#[test]
fn shipped_claims_verify_and_refuted_ones_exit_one() {
    for (stem, _) in shipped_claims() {
        let path = claims_dir().join(format!("{stem}.json"));
        let (code, report, _) = ordtop(&["verify", "--claim", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{stem}");
        assert_eq!(report["results"]["verdict"]["verdict"], "VERIFIED");
    }
    for name in ["cofinite-tampered-open-all", "johnstone-upper-not-strong-d-x21"] {
        let path = claims_dir().join("refuted").join(format!("{name}.json"));
        let (code, report, _) = ordtop(&["verify", "--claim", path.to_str().unwrap()]);
        assert_eq!(code, 1, "{name}");
        assert_eq!(report["results"]["verdict"]["verdict"], "REFUTED");
    }
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad_json = write(&dir, "bad.json", "{\"space\": ");
    assert_eq!(ordtop(&["verify", "--claim", &bad_json]).0, 2);
    assert_eq!(ordtop(&["classify", "--space", &bad_json]).0, 2);

    let wrong_grammar = write(
        &dir,
        "wrong.json",
        r#"{"space": "COFINITE_NAT", "kind": "NOT_SOBER", "witness": {"closed": "PT(1,2)"}}"#,
    );
    let (code, _, stderr) = ordtop(&["verify", "--claim", &wrong_grammar]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error:"), "{stderr}");

    let cycle = write(&dir, "cycle.json", r#"{"kind": "finite-poset", "elements": ["a", "b"], "order": [["a", "b"], ["b", "a"]]}"#);
    assert_eq!(ordtop(&["classify", "--space", &cycle]).0, 2);
    assert_eq!(ordtop(&["suite", "--max-size", "9"]).0, 2);
    assert_eq!(ordtop(&["zoo", "NO_SUCH_SPACE"]).0, 2);
    assert_eq!(ordtop(&["frobnicate"]).0, 2);
    assert_eq!(ordtop(&["verify", "--claim", "/nonexistent/claim.json"]).0, 2);
}

#[test]
fn sets_of_small_spaces() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = write(&dir, "a2.json", r#"{"kind": "finite-poset", "elements": ["x", "y"], "order": []}"#);
    let (code, report, _) = ordtop(&["sets", "--space", &a2, "--which", "kx"]);
    assert_eq!(code, 0);
    let sets: Vec<Vec<String>> = serde_json::from_value(report["results"]["sets"].clone()).unwrap();
    let mut sets: Vec<Vec<String>> = sets.into_iter().map(|mut s| { s.sort(); s }).collect();
    sets.sort();
    assert_eq!(sets, vec![vec!["x"], vec!["x", "y"], vec!["y"]]);

    let one = write(&dir, "one.json", r#"{"kind": "finite-space", "carrier": ["p"], "opens": [[], ["p"]]}"#);
    let (code, report, _) = ordtop(&["sets", "--space", &one, "--which", "irr"]);
    assert_eq!(code, 0);
    assert_eq!(report["results"]["sets"], serde_json::json!([["p"]]));
}

#[test]
fn classify_finite_and_zoo_spaces() {
    let dir = tempfile::tempdir().unwrap();
    let v = write(
        &dir,
        "v.json",
        r#"{"kind": "finite-poset", "elements": ["bot", "a", "b"], "order": [["bot", "a"], ["bot", "b"]]}"#,
    );
    let (code, report, _) = ordtop(&["classify", "--space", &v]);
    assert_eq!(code, 0);
    let props = &report["results"]["properties"];
    assert_eq!(props["sober"], true);
    assert_eq!(props["t1"], false);
    assert_eq!(report["tool_version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(report["wall_clock"], Value::Null);
    assert_eq!(report["input_digest"].as_str().unwrap().len(), 64);

    let zoo = write(&dir, "zoo.json", r#"{"kind": "zoo", "space": "EX334_SCOTT"}"#);
    let (code, report, _) = ordtop(&["classify", "--space", &zoo]);
    assert_eq!(code, 0);
    let rows = report["results"][0]["curated"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["id"] == "ex334-scott-not-coherent" && r["status"] == "VERIFIED"));
    assert!(rows.iter().any(|r| r["id"] == "ex334-scott-sober" && r["status"] == "ASSUMED"));
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let (code, _, _) = ordtop(&["zoo", "johnstone-upper", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(report["command"], "zoo");
    assert_eq!(report["results"][0]["space"], "JOHNSTONE_UPPER");
}

#[test]
fn suite_on_a_single_space() {
    let dir = tempfile::tempdir().unwrap();
    let chain = write(&dir, "c.json", r#"{"kind": "finite-poset", "elements": ["0", "1", "2"], "order": [["0", "1"], ["1", "2"]]}"#);
    let (code, report, _) = ordtop(&["suite", "--space", &chain]);
    assert_eq!(code, 0);
    assert_eq!(report["results"]["instances"], 1);
    assert_eq!(report["results"]["failures"], serde_json::json!([]));
}
