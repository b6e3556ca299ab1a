use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contactgrad"))
        .args(args)
        .env_remove("CONTACTGRAD_DATA")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_ov_is_deterministic() {
    let a = run(&["verify", "--table", "ov"]);
    let b = run(&["verify", "--table", "ov", "--jobs", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("10 rows, 10 match, 0 mismatch"));
}

#[test]
fn table_formats() {
    let md = run(&["tables", "--table", "4"]);
    assert_eq!(md.status.code(), Some(0));
    assert!(stdout(&md).starts_with("## Table 4"));
    let json = run(&["--format", "json", "tables", "--table", "ov"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).expect("valid json");
    assert!(v.to_string().contains("\"table_id\":\"ov\""));
    let csv = run(&["--format", "csv", "tables", "--table", "ov"]);
    assert!(stdout(&csv).starts_with("table,row,computed,expected,status,note\n"));
}

#[test]
fn gradation_g2_short_has_depth_3() {
    let o = run(&["gradation", "--algebra", "g2-split", "--root", "short"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("depth: 3"), "{s}");
}

#[test]
fn satake_e6_26_fails_contact() {
    let o = run(&["satake", "--form", "e6(-26)", "--check", "contact"]);
    assert!(stdout(&o).contains("fails Djoković criterion"));
    let o = run(&["satake", "--form", "su(2,3)", "--check", "contact"]);
    assert!(stdout(&o).contains("passes Djoković criterion"));
}

#[test]
fn contactize_exit_codes() {
    let ok = run(&["contactize", "--algebra", "sp2(R)", "--xi", "omega(2)"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let not = run(&["contactize", "--algebra", "sl3(R)", "--xi", "diag(1; 1, 0, -1)"]);
    assert_eq!(not.status.code(), Some(1), "{}", stdout(&not));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--table", "12"]).status.code(), Some(2));
    assert_eq!(run(&["gradation", "--algebra", "xx(9)", "--root", "long"]).status.code(), Some(2));
}
