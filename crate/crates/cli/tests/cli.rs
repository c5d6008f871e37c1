use std::path::Path;
use std::process::{Command, Output};

fn kissing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kissing"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .to_string()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn d600_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("d.json");
    let out = kissing(&["generate", "d600", "--out", path_str(&file)]);
    assert!(out.status.success());
    let stats = kissing(&["stats", path_str(&file)]);
    assert_eq!(stats.status.code(), Some(0));
    let text = stdout(&stats);
    assert_eq!(field(&text, "balls"), "120");
    assert_eq!(field(&text, "tangencies"), "720");
    assert_eq!(field(&text, "k"), "12");
    assert_eq!(field(&text, "nerve_condition"), "true");
}

#[test]
fn pn_projected_bound_passes() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = dir.path().join("p3.json");
    let r3 = dir.path().join("p3r.json");
    let out = kissing(&["generate", "pn", "--n", "3", "--mode", "direct", "--out", path_str(&s3)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let out = kissing(&["project", path_str(&s3), "--pole", "-1,0,0,0", "--out", path_str(&r3)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let bound = kissing(&["bound", path_str(&r3)]);
    assert_eq!(bound.status.code(), Some(0));
    let text = stdout(&bound);
    assert_eq!(field(&text, "pass"), "true");
    assert_eq!(field(&text, "tangencies"), "2694");
}

#[test]
fn nerve_strategies_agree_on_projected_file() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = dir.path().join("p2.json");
    let r3 = dir.path().join("p2r.json");
    assert!(kissing(&["generate", "pn", "--n", "2", "--out", path_str(&s3)])
        .status
        .success());
    assert!(
        kissing(&["project", path_str(&s3), "--pole", "-1,0,0,0", "--out", path_str(&r3)])
            .status
            .success()
    );
    let grid = stdout(&kissing(&["nerve", path_str(&r3), "--strategy", "grid"]));
    let all = stdout(&kissing(&["nerve", path_str(&r3), "--strategy", "all_pairs"]));
    assert_eq!(grid, all);
    assert!(grid.contains("\"edge_count\":2028"));
}

#[test]
fn report_prints_csv() {
    let out = kissing(&["report", "--max-n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,balls,tangencies,k,gap");
    assert_eq!(lines[1], "0,118,696,11.7966101695,0.7694275664");
    assert_eq!(lines.len(), 4);
}

#[test]
fn bound_rejects_s3_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("d.json");
    assert!(kissing(&["generate", "d600", "--out", path_str(&file)])
        .status
        .success());
    let out = kissing(&["bound", path_str(&file)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pole_inside_a_ball_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("d.json");
    assert!(kissing(&["generate", "d600", "--out", path_str(&file)])
        .status
        .success());
    let out = kissing(&["project", path_str(&file), "--pole", "1,0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_and_missing_files_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        "{\"format_version\": 1,\n \"chart\": \"s3\",\n \"balls\": [oops]}\n",
    )
    .unwrap();
    let out = kissing(&["verify", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let out = kissing(&["stats", path_str(&dir.path().join("missing.json"))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn overlapping_packing_fails_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("o.json");
    std::fs::write(
        &file,
        r#"{"format_version": 1, "chart": "r3", "balls": [
            {"center": [0, 0, 0], "radius": 1},
            {"center": [1.5, 0, 0], "radius": 1}
        ]}"#,
    )
    .unwrap();
    let out = kissing(&["verify", path_str(&file)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(field(&stdout(&out), "ok"), "false");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(kissing(&["generate", "pn"]).status.code(), Some(2));
    assert_eq!(
        kissing(&["nerve", "x.json", "--strategy", "fast"]).status.code(),
        Some(2)
    );
    assert_eq!(
        kissing(&["generate", "pn", "--n", "13", "--mode", "direct"])
            .status
            .code(),
        Some(2)
    );
}
