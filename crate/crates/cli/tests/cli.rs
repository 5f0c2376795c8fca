use std::process::{Command, Output};

fn s6q(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_s6q"))
        .args(args)
        .env_remove("QC_DEFAULT_SAMPLE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_generic_json() {
    let out = s6q(&["verify", "--t", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["t"], "1");
    assert_eq!(doc["verdict"], "NOT RATIONAL (certified)");
}

#[test]
fn verify_igusa_is_outside_hypotheses() {
    let out = s6q(&["verify", "--t", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict: OUTSIDE HYPOTHESES"));
}

#[test]
fn gate_and_parser() {
    assert_eq!(s6q(&["verify", "--t", "0/1"]).status.code(), Some(0));
    let bad = s6q(&["verify", "--t", "abc"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("--t"));
    assert_eq!(s6q(&["verify"]).status.code(), Some(2));
    assert_eq!(
        s6q(&["verify", "--t", "1", "--sample"]).status.code(),
        Some(2)
    );
    assert_eq!(s6q(&["verify", "--t", "1/0"]).status.code(), Some(2));
}

#[test]
fn negative_and_fractional_parameters() {
    let out = s6q(&["verify", "--t", "-7/3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"t\": \"-7/3\""));
}

#[test]
fn special_parameters() {
    let out = s6q(&["verify", "--special", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    let ts: Vec<&str> = doc.iter().map(|c| c["t"].as_str().unwrap()).collect();
    assert_eq!(ts, ["2", "6", "10/7"]);
    assert!(doc.iter().all(|c| c["verdict"] == "OUTSIDE HYPOTHESES"));
}

#[test]
fn sample_override_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_s6q"))
        .args(["verify", "--sample", "--format", "json"])
        .env("QC_DEFAULT_SAMPLE", "3, 1/2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.len(), 2);
    assert_eq!(doc[1]["t"], "1/2");

    let bad = Command::new(env!("CARGO_BIN_EXE_s6q"))
        .args(["verify", "--sample"])
        .env("QC_DEFAULT_SAMPLE", "1,x")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn timing_goes_to_stderr_only() {
    let plain = s6q(&["verify", "--t", "6"]);
    let timed = s6q(&["verify", "--t", "6", "--timing"]);
    assert_eq!(plain.stdout, timed.stdout);
    assert!(String::from_utf8_lossy(&timed.stderr).contains("timing: t = 6"));
}

#[test]
fn report_is_deterministic() {
    let a = s6q(&["report", "--format", "json"]);
    let b = s6q(&["report", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(doc["summary"].as_array().unwrap().len(), 10);
    assert!(doc["summary"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s["as_expected"] == true));
}

#[test]
fn report_text_has_summary() {
    let out = s6q(&["report", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("summary\n"));
    assert!(text.contains("t = 10/7"));
}
