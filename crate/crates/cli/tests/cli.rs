use std::process::{Command, Output};

use serde_json::Value;

fn loopkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopkit"))
        .args(args)
        .env_remove("LOOPKIT_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn last_line(o: &Output) -> String {
    stdout(o).lines().last().unwrap_or_default().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = loopkit(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn psi_at_tau_one() {
    let o = loopkit(&["psi", "--pattern", "()()", "--p", "1", "--tau", "1"]);
    assert!(o.status.success());
    assert_eq!(last_line(&o), "2");
    assert_eq!(stdout(&o).lines().next().unwrap(), "# loopkit psi --pattern '()()' --p 1 --tau 1");
}

#[test]
fn psi_symbolic() {
    let o = loopkit(&["psi", "--pattern", "()()", "--p", "2"]);
    assert_eq!(last_line(&o), "3τ");
}

#[test]
fn ground_state_sums_to_seven() {
    let v = json(&["ground-state", "--n", "3"]);
    assert_eq!(v["sum"], "7");
    assert_eq!(v["components"].as_array().unwrap().len(), 5);
}

#[test]
fn nilp_g_lgv() {
    let o = loopkit(&["nilp", "G", "--p", "1", "--r", "2", "--method", "lgv", "--tau", "1"]);
    assert!(o.status.success());
    assert_eq!(last_line(&o), "7");
}

#[test]
fn nilp_methods_agree() {
    let values: Vec<Value> = ["brute", "lgv", "ct"]
        .iter()
        .map(|m| json(&["nilp", "G", "--p", "2", "--r", "2", "--method", m])["tau_poly"].clone())
        .collect();
    assert_eq!(values[0], values[1]);
    assert_eq!(values[1], values[2]);
}

#[test]
fn closed_forms_agree() {
    let k = json(&["closed-form", "kratt", "--p", "2", "--r", "3"]);
    let s = json(&["closed-form", "sratio", "--p", "2", "--r", "3"]);
    assert_eq!(k["value"], s["value"]);
}

#[test]
fn sum_rule_and_interpolation_succeed() {
    assert!(loopkit(&["sum-rule", "--r", "2", "--p", "1"]).status.success());
    let v = json(&["interpolate", "--pattern", "()()()"]);
    assert_eq!(v["holds"], true);
    assert_eq!(v["young"], serde_json::json!([2, 1]));
}

#[test]
fn verify_suite_passes() {
    let o = loopkit(&["verify", "--suite", "tl", "--n", "3"]);
    assert!(o.status.success());
    assert!(last_line(&o).ends_with("0 failed"));
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(loopkit(&["psi", "--pattern", "(("]).status.code(), Some(2));
    assert_eq!(loopkit(&["psi", "--pattern", "()", "--tau", "x"]).status.code(), Some(2));
    assert_eq!(loopkit(&["ground-state", "--n", "2", "--tau", "2"]).status.code(), Some(2));
    assert_eq!(loopkit(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(loopkit(&["matchings", "--n", "2", "--json", "--csv"]).status.code(), Some(2));
}

#[test]
fn caps_exit_4() {
    let o = loopkit(&["matchings", "--n", "9"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--max-n"));
    let o = Command::new(env!("CARGO_BIN_EXE_loopkit"))
        .args(["matchings", "--n", "7"])
        .env("LOOPKIT_MAX_N", "7")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn too_few_interpolation_points_is_an_input_error() {
    // A cubic needs |Y| + 2 = 5 samples before its degree says anything.
    let o = loopkit(&["interpolate", "--pattern", "()()()", "--p-max", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(loopkit(&["interpolate", "--pattern", "()()()", "--p-max", "4"]).status.success());
}

#[test]
fn csv_output() {
    let o = loopkit(&["psi-nested", "--r", "2", "--p", "2", "--csv"]);
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(&headers[0], "pattern");
    let rows: Vec<_> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(&rows[1][0], "()()");
}

#[test]
fn json_matches_library() {
    let v = json(&["psi", "--pattern", "(())()", "--p", "2"]);
    let lib = loopkit::qkz::psi_nested(&"(())()".parse().unwrap(), 2).unwrap();
    let from_cli: loopkit::qkz::PsiValue = serde_json::from_value(v).unwrap();
    assert_eq!(from_cli, lib);
}

#[test]
fn output_does_not_depend_on_thread_count() {
    for args in [
        &["psi-nested", "--r", "3", "--p", "2"][..],
        &["nilp", "G", "--p", "1", "--r", "3", "--method", "brute", "--json"][..],
        &["ground-state", "--n", "4", "--csv"][..],
        &["sum-open", "--p", "2", "--r", "3"][..],
    ] {
        let mut one = args.to_vec();
        one.extend(["--threads", "1"]);
        let mut four = args.to_vec();
        four.extend(["--threads", "4"]);
        let (a, b) = (loopkit(&one), loopkit(&four));
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
