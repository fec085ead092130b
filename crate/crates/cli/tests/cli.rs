use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_freecurves"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        pipe.write_all(text.as_bytes()).unwrap();
    }
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn generate(name: &str, param: Option<&str>) -> String {
    let mut args = vec!["generate", name];
    args.extend(param);
    stdout(&run(&args, None))
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn generate_deleted_fermat() {
    let v = json(&generate("fermat_deleted", Some("3")));
    assert_eq!(v["degree"], 8);
    assert!(!v["terms"].as_array().unwrap().is_empty());
}

#[test]
fn generate_z17() {
    let v = json(&generate("Z17", None));
    assert_eq!(v["points"].as_array().unwrap().len(), 17);
}

#[test]
fn generate_to_file() {
    let path = std::env::temp_dir().join(format!("freecurves-cli-{}.json", std::process::id()));
    let out = run(&["generate", "A9", "-o", path.to_str().unwrap()], None);
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, generate("A9", None));
}

#[test]
fn bad_names_and_parameters_exit_2() {
    assert_eq!(run(&["generate", "conic_family", "1"], None).status.code(), Some(2));
    let out = run(&["generate", "no_such_curve"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(2));
}

#[test]
fn analyze_a9_resolution() {
    let curve = generate("A9", None);
    let text = stdout(&run(&["analyze", "-", "--resolution"], Some(&curve)));
    assert!(text.contains("0 -> S(-14) -> S(-13)^2 + S(-12) -> S(-8)^3 -> S"));
    let v = json(&text);
    assert_eq!(v["classification"]["almost_free"], true);
    assert_eq!(v["defect"]["d"], v["classification"]["d"]);
    assert_eq!(v["syzygies"]["d"], v["classification"]["d"]);
}

#[test]
fn analyze_text_mode() {
    let curve = generate("fermat", Some("3"));
    let text = stdout(&run(&["--text", "analyze", "-", "--resolution"], Some(&curve)));
    assert!(text.contains("class: free"));
    assert!(text.contains("resolution: 0 → S(−12)² → S(−8)³ → S"), "{text}");
}

#[test]
fn analyze_maclane_conics() {
    let curve = generate("maclane_conics", None);
    let text = stdout(&run(&["analyze", "-"], Some(&curve)));
    assert!(text.contains("\"nu\": 25"));
}

#[test]
fn non_reduced_input_exits_3() {
    let curve = r#"{"degree":3,"terms":[{"num":"1","den":"1","exp":[2,1,0]}]}"#;
    let out = run(&["analyze", "-"], Some(curve));
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not reduced"));
}

#[test]
fn malformed_input_exits_2() {
    assert_eq!(run(&["analyze", "-"], Some("{\"degree\": 2")).status.code(), Some(2));
    assert_eq!(run(&["analyze", "/no/such/file.json"], None).status.code(), Some(2));
}

#[test]
fn z18_scan_and_curve() {
    let z = generate("Z18", None);
    let v = json(&stdout(&run(&["unexpected", "-", "--scan"], Some(&z))));
    assert_eq!(v["criterion"]["degrees"], serde_json::json!([8, 9]));
    assert_eq!(v["interpolation"]["degrees"], serde_json::json!([8, 9]));
    assert_eq!(v["agree"], true);

    let v = json(&stdout(&run(&["unexpected", "-", "--d", "8", "--m", "7", "--emit-curve"], Some(&z))));
    assert_eq!(v["unexpected"], true);
    assert_eq!(v["expected"], 0);
    assert_eq!(v["curve"]["degree"], 8);
    assert_eq!(v["point"].as_array().unwrap().len(), 3);
}

#[test]
fn triangle_scan_is_empty() {
    let z = generate("triangle", None);
    let v = json(&stdout(&run(&["unexpected", "-", "--scan"], Some(&z))));
    assert_eq!(v["interpolation"]["admits"], false);
    assert_eq!(v["agree"], true);
}

#[test]
fn report_fields() {
    let z = generate("Z18", None);
    let v = json(&stdout(&run(&["unexpected", "-", "--d", "10", "--m", "9"], Some(&z))));
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for k in ["d", "m", "actual", "expected", "unexpected", "samples"] {
        assert!(keys.contains(&k), "{k}");
    }
    assert_eq!(v["unexpected"], false);
}

#[test]
fn seeded_output_is_deterministic() {
    let z = generate("Z17", None);
    let args = ["--json", "unexpected", "-", "--d", "8", "--m", "7", "--emit-curve", "--seed", "17"];
    let a = stdout(&run(&args, Some(&z)));
    let b = stdout(&run(&args, Some(&z)));
    assert_eq!(a, b);
    assert_eq!(a.trim_end().lines().count(), 1);
}

#[test]
fn json_reports_round_trip_bytewise() {
    let curve = generate("klein_decic", None);
    for flag in ["--json", "--pretty"] {
        let text = stdout(&run(&[flag, "analyze", "-", "--resolution"], Some(&curve)));
        let body = text.trim_end();
        let reserialized = if flag == "--json" {
            serde_json::to_string(&json(body)).unwrap()
        } else {
            serde_json::to_string_pretty(&json(body)).unwrap()
        };
        assert_eq!(reserialized, body);
    }
    let generated = generate("Z17", None);
    assert_eq!(serde_json::to_string_pretty(&json(&generated)).unwrap(), generated.trim_end());
}

#[test]
fn sequential_matches_parallel() {
    let curve = generate("fermat_deleted", Some("4"));
    let par = stdout(&run(&["analyze", "-"], Some(&curve)));
    let seq = stdout(&run(&["--sequential", "analyze", "-"], Some(&curve)));
    assert_eq!(par, seq);
}
