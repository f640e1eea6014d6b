//! End-to-end tests that drive the compiled binary the way a user would:
//! spawning it with real argument vectors and checking the envelope text,
//! the json rendering, and the exit codes.

use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_weylgen"));
    // Isolate the tests from any ambient default-caps setting.
    cmd.env_remove("WEYLGEN_CAPS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary should spawn")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be utf-8")
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("binary should exit normally")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_of(out)).expect("stdout should be one json object")
}

#[test]
fn character_query_prints_the_polynomial() {
    let out = run(&["char", "-m", "1,0,1"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("command: char"), "{text}");
    assert!(text.contains("character: z1*z3 - 1"), "{text}");
    assert!(text.contains("status: ok"), "{text}");
}

#[test]
fn character_query_can_expand_into_weight_monomials() {
    let out = run(&["char", "-m", "1,0,0", "--x"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("variables: x"), "{text}");
    assert!(text.contains("terms: 4"), "{text}");
}

#[test]
fn other_algebras_use_the_weyl_formula() {
    let out = run(&["char", "-m", "1,0,0", "--algebra", "b3"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("algebra: b3"), "{text}");
    assert!(text.contains("terms: 7"), "{text}");
}

#[test]
fn dimension_query_prints_the_exact_value() {
    let out = run(&["dim", "-m", "1,0,1"]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("dimension: 15"));
}

#[test]
fn json_and_text_carry_the_same_data() {
    let text_out = run(&["dim", "-m", "1,0,1"]);
    let json_out = run(&["dim", "-m", "1,0,1", "--format", "json"]);
    let v = json_of(&json_out);
    assert_eq!(v["dimension"], "15");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["m"], serde_json::json!([1, 0, 1]));

    // The text rendering must state the same value on its own line.
    let text = stdout_of(&text_out);
    let line = text
        .lines()
        .find(|l| l.starts_with("dimension: "))
        .expect("text output should have a dimension line");
    assert_eq!(line.trim_start_matches("dimension: "), v["dimension"]);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["char", "-m", "2,1,0"],
        vec!["weights", "-m", "1,0,1", "--format", "json"],
        vec!["mult", "-m", "2,0,2", "-n", "1,0,1"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
    }
}

#[test]
fn multiplicity_routes_agree_and_report_pass() {
    let out = run(&["mult", "-m", "1,0,1", "-n", "0,0,0", "--method", "all"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    for line in [
        "closed: 3",
        "kostant: 3",
        "genfun: 3",
        "direct: 3",
        "agree: true",
        "status: pass",
    ] {
        assert!(text.contains(line), "missing {line:?} in {text}");
    }

    let v = json_of(&run(&[
        "mult", "-m", "1,0,1", "-n", "0,0,0", "--format", "json",
    ]));
    assert_eq!(v["closed"], "3");
    assert_eq!(v["agree"], true);
}

#[test]
fn multiplicity_handles_targets_outside_the_tables() {
    // Non-dominant target (a root of the adjoint): only the Kostant sum and
    // the direct diagram apply, and they must still agree.
    let out = run(&["mult", "-m", "1,0,1", "-n", "1,1,-1"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("closed: n/a"), "{text}");
    assert!(text.contains("genfun: n/a"), "{text}");
    assert!(text.contains("kostant: 1"), "{text}");
    assert!(text.contains("agree: true"), "{text}");

    // A leading hyphen in the target must parse as a value, not a flag.
    let single = run(&["mult", "-m", "1,0,1", "-n", "-1,1,0", "--method", "kostant"]);
    assert!(stdout_of(&single).contains("value: 0"));
}

#[test]
fn weights_command_lists_the_diagram() {
    let out = run(&["weights", "-m", "1,0,1"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("dimension: 15"), "{text}");
    assert!(text.contains("\n  0,0,0: 3"), "{text}");
    assert!(text.contains("distinct: 13"), "{text}");
}

#[test]
fn kostant_query_counts_decompositions() {
    let out = run(&["kostant", "-k", "1,1,1"]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("count: 4"));
}

#[test]
fn generating_function_expansion_respects_the_env_default() {
    let out = bin()
        .env("WEYLGEN_CAPS", "1,1,1")
        .args(["genfun-expand", "--which", "g"])
        .output()
        .expect("binary should spawn");
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("caps: 1,1,1"), "{text}");
    assert!(text.contains("entries: 8"), "{text}");
    assert!(text.contains("\n  1,0,1: z1*z3 - 1"), "{text}");
}

#[test]
fn pde_check_passes_on_the_shipped_functions() {
    let out = run(&["genfun-verify", "--which", "g", "--caps", "2,2,2"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("residual_terms: 0"), "{text}");
    assert!(text.contains("status: pass"), "{text}");

    let real = run(&["genfun-verify", "--which", "g-real", "--caps", "3,3"]);
    assert_eq!(code_of(&real), 0);
    assert!(stdout_of(&real).contains("status: pass"));
}

#[test]
fn self_conjugate_query_cross_checks_both_generating_functions() {
    let out = run(&["real", "-m", "1,1"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("weight: 1,1,1"), "{text}");
    assert!(
        text.contains("character_matches_generating_function: true"),
        "{text}"
    );
    assert!(
        text.contains("dimension_matches_generating_function: true"),
        "{text}"
    );
    assert!(text.contains("status: pass"), "{text}");
}

#[test]
fn restricted_families_expand_and_verify() {
    let out = run(&[
        "restricted",
        "--algebra",
        "b3",
        "--kind",
        "first",
        "--caps",
        "2",
        "--verify",
    ]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("verified: true"), "{text}");
    assert!(text.contains("status: pass"), "{text}");
}

#[test]
fn restricted_families_need_a_tabulated_algebra() {
    let out = run(&["restricted", "--kind", "first"]);
    assert_eq!(code_of(&out), 1);
}

#[test]
fn selftest_reports_single_criteria() {
    let out = run(&["selftest", "--level", "quick", "--only", "9"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("independent spot values"), "{text}");
    assert!(text.contains("PASS"), "{text}");
    assert!(text.contains("passed: 1"), "{text}");
    assert!(text.contains("status: pass"), "{text}");
}

#[test]
fn usage_errors_exit_with_code_one() {
    for args in [
        vec!["char", "-m", "1,0"],
        vec!["char", "-m", "0,-1,0"],
        vec!["dim"],
        vec!["frobnicate"],
        vec!["mult", "-m", "1,0,1", "-n", "1,1,1", "--method", "closed"],
        vec!["genfun-expand", "--which", "g", "--caps", "2,2"],
        vec!["selftest", "--only", "11"],
    ] {
        let out = run(&args);
        assert_eq!(code_of(&out), 1, "args {args:?}");
    }
}

#[test]
fn help_exits_cleanly() {
    let out = run(&["--help"]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("weylgen"));
}
