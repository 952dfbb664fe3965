use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootposet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_e6_succeeds() {
    let o = run(&["verify", "--type", "E6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn d4_glorious_table_has_three_rows() {
    let o = run(&["glorious", "--type", "D4", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("a "));
}

#[test]
fn unknown_family_is_a_usage_error() {
    let o = run(&["info", "--type", "H3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown family"));
}

#[test]
fn domain_precondition_is_a_usage_error() {
    let o = run(&["semiglorious", "--type", "E6"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["tails", "--type", "B4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_skips_inapplicable_types() {
    let o = run(&["semiglorious", "--all", "--max-rank", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("== B3 =="));
    assert!(!text.contains("== D4 =="));
}

#[test]
fn json_output_parses() {
    let o = run(&["glorious", "--type", "E7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["type"], "E7");
    assert_eq!(v["data"].as_array().unwrap().len(), 6);
}

#[test]
fn export_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = run(&["export", "--type", "F4", "--format", "json", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(!x.is_empty());
    assert_eq!(x, y);
}

#[test]
fn hasse_dot_highlights_interval() {
    let o = run(&["hasse", "--type", "D4", "--format", "dot", "--highlight", "interval"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("fillcolor").count(), 8);
}
