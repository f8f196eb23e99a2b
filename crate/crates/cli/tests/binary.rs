use std::process::{Command, Output};

fn sgp_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgp-lab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn alpha_sum_prints_both_routes() {
    let o = sgp_lab(&["alpha-sum", "8", "4", "1", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("cyclotomic route: 3"));
    assert!(text.contains("counting route: 3"));
    assert_eq!(text.lines().last(), Some("3 (= q−5); inner product = 2"));
}

#[test]
fn sl2_table_as_json() {
    let o = sgp_lab(&["chartab", "sl2:4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 60);
    assert_eq!(v["classes"].as_array().unwrap().len(), 5);
    let rows = v["irreducibles"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 5));
    // identical bytes on a second run
    assert_eq!(sgp_lab(&["chartab", "sl2:4", "--format", "json"]).stdout, o.stdout);
}

#[test]
fn csv_and_field_output() {
    let o = sgp_lab(&["chartab", "s6", "--format", "csv", "--show-field"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("# GF(2)"));
    assert_eq!(text.lines().filter(|l| l.starts_with("chi")).count(), 11);
    let o = sgp_lab(&["show-field", "16"]);
    assert!(stdout(&o).contains("x^4 + x + 1"));
}

#[test]
fn sgp_verdicts() {
    let o = sgp_lab(&["sgp", "sp4:2", "s6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "sgp");
    let o = sgp_lab(&["scan-maximal", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().all(|l| l.contains(": sgp (")));
}

#[test]
fn families_report() {
    let o = sgp_lab(&["families", "sz", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["total_degree"], "484");
    let o = sgp_lab(&["families", "ext", "4"]);
    assert!(stdout(&o).ends_with("total degree = 324\n"));
}

#[test]
fn exit_codes() {
    let o = sgp_lab(&["--max-order", "1000", "chartab", "sp4:4"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    assert_eq!(sgp_lab(&["scan-maximal", "8"]).status.code(), Some(3));
    let o = sgp_lab(&["chartab", "sz:4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 11"));
    assert_eq!(sgp_lab(&["sgp", "sp4:2", "sl2:4"]).status.code(), Some(2));
    assert_eq!(sgp_lab(&["--help"]).status.code(), Some(0));
}

#[test]
fn quick_verification_passes() {
    let o = sgp_lab(&["verify-paper"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 6);
    assert!(text.ends_with("6/6 criteria passed (tier quick)\n"));
}

#[test]
fn sp4_4_scan_has_no_strong_gelfand_maximal_subgroup() {
    let o = sgp_lab(&["scan-maximal", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().all(|l| l.contains(": not_sgp (")));
    assert_eq!(text.matches("witness ⟨χ↓H, ψ⟩ = 2").count(), 2);
}
