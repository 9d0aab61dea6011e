//! End-to-end tests of the command-line surface: golden text/JSON/CSV
//! renderings, file inputs and outputs, exit codes, and the JSON round
//! trip of `analyze`.

use std::process::Command;

use gorbound::cli;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["gorbound".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

const PAPER_DIAGRAM_JSON: &str = "{\"codim\":3,\"entries\":[\
    {\"i\":0,\"degree\":0,\"mult\":1},\
    {\"i\":1,\"degree\":3,\"mult\":4},{\"i\":1,\"degree\":4,\"mult\":1},\
    {\"i\":2,\"degree\":4,\"mult\":1},{\"i\":2,\"degree\":5,\"mult\":4},\
    {\"i\":3,\"degree\":8,\"mult\":1}]}";

#[test]
fn analyze_text_golden() {
    let (code, out, err) = run(&["analyze", "1,3,6,6,3,1"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(
        out,
        "hilbert function:  1,3,6,6,3,1\n\
         socle degree:      5\n\
         multiplicity:      20\n\
         symmetric:         yes\n\
         third difference:  1, 0, 0, -4, 0, 4, 0, 0, -1   (t = 0..8)\n\
         initial degree:    3\n\
         refined invariants: n1 = 3, n2 = 5, N1 = 3, N2 = 5   (socle shift s = 8)\n"
    );
}

#[test]
fn analyze_json_roundtrips_the_input() {
    let (code, out, _) = run(&["analyze", "1, 3, 6, 6, 3, 1", "--format", "json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["hilbert"], "1,3,6,6,3,1");
    assert_eq!(value["multiplicity"], 20);
    assert_eq!(value["n1"], 3);
    assert_eq!(value["N2"], 5);
    // Round trip: the echoed field parses back to the same function.
    let back: gorbound::HilbertFunction = value["hilbert"].as_str().unwrap().parse().unwrap();
    assert_eq!(back.to_string(), "1,3,6,6,3,1");
}

#[test]
fn analyze_warns_on_linear_forms() {
    let (code, out, _) = run(&["analyze", "1,2,2,1"]);
    assert_eq!(code, 0);
    assert!(out.contains("h_1 < 3"));
}

#[test]
fn bounds_csv_golden() {
    let (code, out, _) = run(&["bounds", "1,3,6,6,3,1", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "\"1,3,6,6,3,1\",20,16,80/3,19,76/3,20,20,holds,holds,holds,holds,sharp,sharp\n"
    );
}

#[test]
fn bounds_text_contains_table_and_extremes() {
    let (code, out, _) = run(&["bounds", "1,3,6,6,3,1"]);
    assert_eq!(code, 0);
    assert!(out.contains("multiplicity e = 20"));
    assert!(out.contains("m = (3, 4, 8)  M = (4, 5, 8)"));
    assert!(out.contains("classic"));
    assert!(out.contains("80/3"));
    assert!(out.contains("sharp"));
}

#[test]
fn bounds_from_diagram_file_matches_bounds_from_hilbert() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("paper.json");
    std::fs::write(&path, PAPER_DIAGRAM_JSON).unwrap();
    let (code, from_file, _) = run(&[
        "bounds",
        "--diagram",
        path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let (_, from_hilbert, _) = run(&["bounds", "1,3,6,6,3,1", "--format", "csv"]);
    assert_eq!(from_file, from_hilbert);
}

#[test]
fn bounds_single_family_selection() {
    let (code, out, _) = run(&[
        "bounds",
        "1,3,6,6,3,1",
        "--family",
        "refined",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["family"], "refined");
    assert_eq!(value["lower"]["value"], "20");
    assert_eq!(value["lower"]["sharp"], true);

    let (code, _, err) = run(&["bounds", "1,3,6,6,3,1", "--family", "unknown"]);
    assert_eq!(code, 1);
    assert!(err.contains("classic, improved, refined"));
}

#[test]
fn bounds_requires_exactly_one_input() {
    let (code, _, _) = run(&["bounds"]);
    assert_eq!(code, 2);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    std::fs::write(&path, PAPER_DIAGRAM_JSON).unwrap();
    let (code, _, _) = run(&["bounds", "1,3,6,6,3,1", "--diagram", path.to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn cancel_text_golden() {
    let (code, out, _) = run(&["cancel", "1,3,6,6,3,1", "--side", "min"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "input:   1,3,6,6,3,1\n\
         pairing: s = 8, Q = (3, 3, 3, 3, 4), P = (5, 5, 5, 5, 4)\n\
         side:    min\n\
         steps:   (none)\n\
         terminal: diagonal-only at central degree 4; after one numerical cancellation the extreme = 5\n"
    );
}

#[test]
fn cancel_max_side_reads_the_other_extreme() {
    let (code, out, _) = run(&["cancel", "1,3,6,6,3,1", "--side", "max", "--format", "json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["terminal"]["kind"], "diagonal_only");
    assert_eq!(value["terminal"]["central"], 4);
    assert_eq!(value["terminal"]["post_extreme"], 3);
}

#[test]
fn cancel_no_match_terminal() {
    let (code, out, _) = run(&["cancel", "1,3,3,1", "--side", "min"]);
    assert_eq!(code, 0);
    assert!(out.contains("no match for extreme degree 4"));
}

#[test]
fn enumerate_golden_to_socle_two() {
    let (code, out, _) = run(&["enumerate", "--max-socle", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1\n1,1\n1,1,1\n1,2,1\n1,3,1\n");
    let (code, out, _) = run(&["enumerate", "--max-socle", "2", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[\"1\",\"1,1\",\"1,1,1\",\"1,2,1\",\"1,3,1\"]\n");
}

#[test]
fn enumerate_filter_none_is_a_superset() {
    let (_, si, _) = run(&["enumerate", "--max-socle", "8"]);
    let (_, all, _) = run(&["enumerate", "--max-socle", "8", "--filter", "none"]);
    assert!(all.lines().count() > si.lines().count());
    for line in si.lines() {
        assert!(all.lines().any(|l| l == line));
    }
}

#[test]
fn certify_writes_reports_and_exits_clean() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("run");
    let (code, out, err) = run(&[
        "certify",
        "--max-socle",
        "6",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("violations:            0"));
    let report = std::fs::read_to_string(out_dir.join("report.json")).unwrap();
    let parsed: gorbound::CertificationRun = serde_json::from_str(&report).unwrap();
    assert!(parsed.success());
    assert!(parsed.counts.instances > 0);
    let census = std::fs::read_to_string(out_dir.join("census.csv")).unwrap();
    assert!(census.starts_with("hilbert,e,classic_lower"));
    assert_eq!(census.lines().count(), parsed.counts.instances + 1);

    // census subcommand renders the same run file.
    let (code, table, _) = run(&[
        "census",
        "--run",
        out_dir.join("report.json").to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(table.contains("1,3,6,6,3,1"));
    let (code, csv, _) = run(&[
        "census",
        "--run",
        out_dir.join("report.json").to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(csv, census);
}

#[test]
fn out_flag_redirects_primary_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("analysis.json");
    let (code, out, _) = run(&[
        "analyze",
        "1,3,6,6,3,1",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("\"multiplicity\":20"));
}

#[test]
fn exit_codes() {
    // Validation failure.
    let (code, _, err) = run(&["analyze", "1,3,7"]);
    assert_eq!(code, 1);
    assert!(err.contains("polynomial-ring dimension"));
    // Usage error.
    let (code, _, _) = run(&["bogus"]);
    assert_eq!(code, 2);
    // Help prints to stdout and exits 0.
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn diagram_errors_are_validation_failures() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"codim\":2,\"entries\":[]}").unwrap();
    let (code, _, err) = run(&["bounds", "--diagram", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("codim"));

    // A level (two socle degrees) diagram cannot be cancelled.
    let level = "{\"codim\":3,\"entries\":[{\"i\":1,\"degree\":2,\"mult\":1},\
                 {\"i\":2,\"degree\":3,\"mult\":1},{\"i\":3,\"degree\":4,\"mult\":1},\
                 {\"i\":3,\"degree\":5,\"mult\":1}]}";
    let path = dir.path().join("level.json");
    std::fs::write(&path, level).unwrap();
    let (code, _, err) = run(&["cancel", "--diagram", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("more than one degree"));
}

#[test]
fn real_binary_end_to_end() {
    let exe = env!("CARGO_BIN_EXE_gorbound");
    let output = Command::new(exe)
        .args(["analyze", "1,3,6,6,3,1", "--format", "json"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(value["multiplicity"], 20);

    let output = Command::new(exe).args(["analyze", "2,1"]).output().unwrap();
    assert_eq!(output.status.code(), Some(1));
}
