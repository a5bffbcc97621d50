use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gabidulin-bench"))
        .args(args)
        .output()
        .expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn complexity_markdown_has_both_tables() {
    let o = run(&["complexity", "--n", "113", "--k", "3", "--tau", "55", "--format", "md"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("### WBA") && s.contains("### TDD"));
    assert!(s.contains("| Up. Poly. |") && s.contains("| Inv. q-Trafo |"));
    assert!(s.contains("**418319014**"));
}

#[test]
fn count_ops_json_has_exactly_the_counter_keys() {
    let o = run(&[
        "count-ops",
        "--decoder",
        "tdd",
        "--trials",
        "2",
        "--seed",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mut keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    keys.sort();
    let mut want = vec![
        "add",
        "multiply",
        "set_shift_table",
        "multiply_shift_tables",
        "mul_alpha_pow",
        "q_power",
        "square",
        "invert",
        "trials",
        "seed",
    ];
    want.sort();
    assert_eq!(keys, want);
    assert_eq!(v["trials"], 2);
    assert_eq!(v["invert"], 55.0);
}

#[test]
fn count_ops_is_deterministic() {
    let args = [
        "count-ops",
        "--decoder",
        "wba",
        "--trials",
        "2",
        "--seed",
        "9",
        "--format",
        "csv",
    ];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn roundtrip_reports_all_ok() {
    let o = run(&["roundtrip", "--trials", "4", "--tau", "55", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("WBA: 4/4 OK") && s.contains("TDD: 4/4 OK"), "{s}");
}

#[test]
fn basis_info_reports_shipped_basis() {
    let o = run(&["basis-info", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["complexity"], 501);
    assert_eq!(v["self_dual"], true);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("gabidulin-bench-{}.csv", std::process::id()));
    let o = run(&["complexity", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(s.starts_with("decoder,step,adds,mults\n"));
    assert!(s.contains("TDD,Total,"));
}

#[test]
fn bad_arguments_exit_2() {
    for args in [
        &["no-such-command"][..],
        &["count-ops", "--bogus"],
        &["count-ops", "--tau", "56"],
        &["roundtrip", "--n", "200"],
        &["bench-field", "--calls", "10"],
        &["complexity", "--format", "xml"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
