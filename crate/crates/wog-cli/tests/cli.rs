//! End-to-end tests of the binary against the fixture corpus, plus
//! format round-trips through the library surface.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use wog_cli::format::GraphFile;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wog")).args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "wog {:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn json_of(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout_of(args)).expect("json output")
}

fn figure_pairs() -> Vec<(&'static str, wog::WeightedOrientedGraph)> {
    vec![
        ("fig1_left.json", wog::samples::fig1_left()),
        ("fig1_right.json", wog::samples::fig1_right()),
        ("fig2_left.json", wog::samples::fig2_left()),
        ("fig2_right.json", wog::samples::fig2_right()),
        ("fig3.json", wog::samples::fig3()),
    ]
}

#[test]
fn fixtures_round_trip_and_match_the_bundled_samples() {
    for (file, sample) in figure_pairs() {
        let path = fixture(file);
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed: GraphFile = serde_json::from_str(&text).unwrap();
        let built =
            wog::graph::build_graph(&parsed.spec(), wog::Normalization::Rewrite).unwrap();
        assert_eq!(built, sample, "{file} diverges from the bundled sample");
        // Writing the graph back preserves everything except edge order,
        // which the builder canonicalizes.
        let mut written = GraphFile::from_graph(&built);
        let rebuilt =
            wog::graph::build_graph(&written.spec(), wog::Normalization::Rewrite).unwrap();
        assert_eq!(rebuilt, built, "{file} rebuild");
        let mut original = parsed.clone();
        written.edges.sort();
        original.edges.sort();
        assert_eq!(written, original, "{file} round trip");
    }
}

#[test]
fn analyze_reports_the_expected_verdicts() {
    let expected = [
        ("fig1_left.json", "false", "false", false),
        ("fig1_right.json", "false", "false", false),
        ("fig2_left.json", "true", "false", true),
        ("fig2_right.json", "true", "false", true),
        ("fig3.json", "true", "true", true),
    ];
    for (file, unmixed, cm, oracle_unmixed) in expected {
        let path = fixture(file);
        let v = json_of(&["analyze", "--format", "json", path.to_str().unwrap()]);
        let r = &v["result"];
        assert_eq!(r["unmixed"]["verdict"], unmixed, "{file}");
        assert_eq!(r["cohen_macaulay"]["verdict"], cm, "{file}");
        assert_eq!(r["oracle"]["unmixed"], oracle_unmixed, "{file}");
        assert_eq!(r["consistent"], true, "{file}");
        assert_eq!(v["command"], "analyze");
        assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn analyze_reports_match_their_goldens() {
    for (file, _) in figure_pairs() {
        let path = fixture(file);
        let mut v = json_of(&["analyze", "--format", "json", path.to_str().unwrap()]);
        v["timing_ms"] = 0.into();
        let golden_path =
            Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/goldens").join(file);
        let golden: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&golden_path).unwrap()).unwrap();
        assert_eq!(v, golden, "{file} golden drifted");
    }
}

#[test]
fn ideal_prints_one_generator_per_edge() {
    let out = stdout_of(&["ideal", fixture("fig1_left.json").to_str().unwrap()]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.contains(&"x2*x5^2"), "weighted head must carry its exponent: {out}");
    assert!(lines.contains(&"x1*x4"));
}

#[test]
fn covers_listings() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("edge.json");
    std::fs::write(
        &path,
        r#"{"vertices":[{"id":"x1"},{"id":"x2"}],"edges":[["x1","x2"]]}"#,
    )
    .unwrap();
    let out = stdout_of(&["covers", "--minimal", path.to_str().unwrap()]);
    assert_eq!(out, "2 minimal covers\n{x1}\n{x2}\n");

    let strong = stdout_of(&["covers", fixture("fig1_left.json").to_str().unwrap()]);
    assert!(strong.starts_with("5 strong covers\n"), "{strong}");
    assert!(strong.contains("witnesses: x5->x4 x5->x6"), "{strong}");
}

#[test]
fn matchings_listing_checks_the_exchange_property() {
    let out =
        stdout_of(&["matchings", "--check-p", fixture("fig2_left.json").to_str().unwrap()]);
    assert_eq!(
        out,
        "2 perfect matchings\n\
         x1-x4 x2-x3 x5-x6  exchange property: yes\n\
         x1-x4 x2-x5 x3-x6  exchange property: yes\n"
    );
}

#[test]
fn oracle_mode_reports_the_histogram() {
    let v = json_of(&[
        "unmixed",
        "--oracle",
        "--format",
        "json",
        fixture("fig1_left.json").to_str().unwrap(),
    ]);
    assert_eq!(v["result"]["unmixed"], false);
    assert_eq!(v["result"]["histogram"]["3"], 4);
    assert_eq!(v["result"]["histogram"]["5"], 1);
}

#[test]
fn malformed_and_missing_inputs_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let missing = dir.path().join("absent.json");
    let out = run(&["analyze", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // An edge referring to an unknown vertex is a build error, same code.
    let unknown = dir.path().join("unknown.json");
    std::fs::write(
        &unknown,
        r#"{"vertices":[{"id":"x1"}],"edges":[["x1","x9"]]}"#,
    )
    .unwrap();
    let out = run(&["analyze", unknown.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bound_flag_refuses_large_instances() {
    let out = run(&["analyze", "--bound", "4", fixture("fig1_left.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bound"), "{err}");
}

#[test]
fn fuzz_is_deterministic_and_clean() {
    let args = ["fuzz", "--family", "whisker", "--count", "6", "--seed", "11", "--max-n", "8"];
    let first = stdout_of(&args);
    let second = stdout_of(&args);
    assert_eq!(first, second);
    assert!(first.ends_with("6 instances checked, 0 disagreements\n"), "{first}");
    assert_eq!(first.lines().count(), 7);

    // JSON mode emits one record per line, no summary on stdout.
    let json_lines = stdout_of(&[
        "fuzz", "--family", "whisker", "--count", "3", "--seed", "11", "--max-n", "8",
        "--format", "json",
    ]);
    for line in json_lines.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("json line");
        assert!(v["report"]["anomalies"].as_array().unwrap().is_empty());
    }
    assert_eq!(json_lines.lines().count(), 3);
}
