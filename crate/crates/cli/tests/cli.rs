use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn satlim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satlim")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn decide_three_points() {
    let o = satlim(&["decide", &fixture("three_points.ideal")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("Saturable"));
}

#[test]
fn hilbert_of_square_at_nine() {
    let o = satlim(&["hilbert", &fixture("bb.ideal"), "--power", "2", "--at", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "17\n");
}

#[test]
fn missing_file_is_an_input_error() {
    assert_eq!(satlim(&["saturate", "nosuchfile"]).status.code(), Some(2));
}

#[test]
fn parse_errors_carry_line_and_column() {
    let dir = std::env::temp_dir().join(format!("satlim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("bad.ideal");
    std::fs::write(&f, "ring: a0 a1\nideal: a0*a1, a0 + b\n").unwrap();
    let o = satlim(&["saturate", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2, column 20"), "{err}");
}

#[test]
fn unsupported_decision_exits_one() {
    let o = satlim(&["decide", &fixture("nonvanishing.ideal")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_report_schema() {
    let o = satlim(&["--json", "obfib", &fixture("three_points.ideal")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for k in ["command", "input_hash", "certificates", "assumptions", "timing_ms"] {
        assert!(v.get(k).is_some(), "missing {k}");
    }
    assert_eq!(v["command"], "obfib");
    assert_eq!(v["value"], 1);
    assert!(v["timing_ms"].is_null());
    assert_eq!(v["input_hash"].as_str().unwrap().len(), 64);

    let o = satlim(&["--json", "--timing", "decide", &fixture("three_points.ideal")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "Saturable");
    assert!(v["timing_ms"].is_u64());
}

#[test]
fn output_is_reproducible() {
    for args in [
        vec!["--json", "hom0", "--degree", "0,1"],
        vec!["limit"],
        vec!["rank3", "square-cert"],
    ] {
        let file = match args[0] {
            "limit" => fixture("three_points.points"),
            "rank3" => fixture("quintic.form"),
            _ => fixture("bb.ideal"),
        };
        let mut full: Vec<&str> = args.clone();
        full.push(&file);
        let (a, b) = (satlim(&full), satlim(&full));
        assert_eq!(a.status.code(), Some(0), "{full:?}");
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn limits_and_certificates() {
    let o = satlim(&["limit", &fixture("three_points.points")]);
    assert!(stdout(&o).contains("saturation: (a1, a0^2*a2 - a0*a2^2)"));
    let o = satlim(&["limit", "--degree-bound", "2", &fixture("three_points.points")]);
    assert!(stdout(&o).contains("complete through degree 2: no"));
    let o = satlim(&["verify-limit-forms", &fixture("collision.family")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2*x0*x1"));
    let o = satlim(&["rank3", "special3", &fixture("sextic_case3.form")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("cactus rank ≤ 8"));
    let o = satlim(&["rank3", "square-cert", &fixture("sextic_case3.form")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn replicate_subset() {
    let o = satlim(&["replicate", "--only", "AC1,AC3,AC4", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("AC3 PASS"));
    assert!(out.ends_with("3/3 passed\n"));
    assert_eq!(satlim(&["replicate", "--only", "AC9"]).status.code(), Some(2));
}
