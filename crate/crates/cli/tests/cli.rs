//! End-to-end checks of the binary: exit codes, envelope output, and
//! the cache environment variable.

use std::process::Command;

use cicrit_cli::OutputEnvelope;

fn cicrit(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_cicrit"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn exit_zero_and_envelope_on_success() {
    let out = cicrit(&["classify", "A", "6", "1", "5", "2", "--format", "json"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let envelope: OutputEnvelope = serde_json::from_str(&text).unwrap();
    assert_eq!(envelope.schema_version, "cicrit/1");
    assert_eq!(envelope.command, "classify");
    assert_eq!(envelope.inputs["d"], serde_json::json!(5));
    assert_eq!(
        envelope.result["verdict"]["reason"],
        serde_json::json!("segre-positivity")
    );
    // Round trip: parse(print(x)) = x.
    let reprinted = envelope.to_json();
    let back: OutputEnvelope = serde_json::from_str(&reprinted).unwrap();
    assert_eq!(envelope, back);
}

#[test]
fn documented_examples() {
    let out = cicrit(&["variety", "C", "8", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().last().unwrap().starts_with("C,8,3,36,14,11,13,false,5,false,true,3"));

    let out = cicrit(&["classify", "A", "11", "1", "81", "10", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("CompleteIntersection,hart-i"));

    let out = cicrit(&["classify", "A", "7", "1", "10", "8", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("CompleteIntersection,ran-i"));

    let out = cicrit(&["deltamin", "4", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("4,12,0,3"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(cicrit(&["deltamin", "0"]).status.code(), Some(1));
    assert_eq!(cicrit(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(cicrit(&["variety", "A", "3", "9"]).status.code(), Some(1));
    assert_eq!(cicrit(&["verify"]).status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = cicrit(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("classify"));
}

#[test]
fn data_unavailable_exits_two() {
    assert_eq!(cicrit(&["variety", "G", "2", "1"]).status.code(), Some(2));
    assert_eq!(cicrit(&["plot", "G", "2", "1"]).status.code(), Some(2));
    assert_eq!(cicrit(&["plot", "F", "4", "1"]).status.code(), Some(2));
    // Below the Picard threshold.
    assert_eq!(
        cicrit(&["classify", "A", "5", "1", "4", "4"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_passes_exit_zero() {
    let out = cicrit(&["verify", "--prop-sch", "4", "8", "--crossover"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("all checks passed"));
}

#[test]
fn cache_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("table.tsv");
    let out = Command::new(env!("CARGO_BIN_EXE_cicrit"))
        .args(["deltamin", "5"])
        .env("CI_CRITERIA_CACHE", &cache)
        .output()
        .unwrap();
    assert!(out.status.success());
    let written = std::fs::read_to_string(&cache).unwrap();
    assert!(written.starts_with("cicrit-deltamin-cache v1"));
    // An explicit flag wins over the environment.
    let other = dir.path().join("flagged.tsv");
    let out = Command::new(env!("CARGO_BIN_EXE_cicrit"))
        .args(["deltamin", "5", "--cache"])
        .arg(&other)
        .env("CI_CRITERIA_CACHE", dir.path().join("ignored.tsv"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(other.exists());
    assert!(!dir.path().join("ignored.tsv").exists());
}

#[test]
fn plot_writes_svg_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("plane.svg");
    let out = Command::new(env!("CARGO_BIN_EXE_cicrit"))
        .args(["plot", "A", "11", "1", "--d-max", "200", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("(m^2, 2m)"));
    assert!(svg.trim_end().ends_with("</svg>"));
}
