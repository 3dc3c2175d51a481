//! End-to-end checks of the command-line surface.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cocyclage"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn kostka_oracle_examples() {
    let out = run(&["kostka", "--n", "2", "--lambda", "2", "--mu", "", "--method", "oracle"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{\"coeffs\":[0,1,0,1]}");

    let out = run(&["kostka", "--n", "1", "--lambda", "1", "--mu", "1", "--method", "oracle"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{\"coeffs\":[1]}");
}

#[test]
fn kostka_methods_agree_per_invocation() {
    for method in ["oracle", "charge", "onerow"] {
        let out = run(&["kostka", "--n", "2", "--lambda", "4", "--mu", "2", "--method", method]);
        assert!(out.status.success(), "method {method}");
        assert_eq!(
            stdout(&out).trim(),
            "{\"coeffs\":[0,1,0,1]}",
            "method {method}"
        );
    }
}

#[test]
fn charge_commands() {
    let out = run(&["charge-a", "3,5,2,2,4,1,1,1,2,3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "4");

    let out = run(&["charge-c", "-1,1", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3");

    let out = run(&["--json", "charge-c", "-1,1", "--n", "1"]);
    assert_eq!(stdout(&out).trim(), "{\"charge\":1}");
}

#[test]
fn cocyclage_commands() {
    let out = run(&["cocyc-a", "1,1,2;3,5;4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 1 5\n2 3\n4\n");

    let out = run(&["--json", "cocyc-c", "-8,-5;-5,-4,-3;-3,3,8"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{\"tableau\":\"-8,-5;-5,-4;-3,-3,3,8\"}");

    let out = run(&["insert-c", "-3", "-8,-5;-5,-4;-3,3,8"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-8 -5\n-5 -4\n-3 -3  3  8\n");
}

#[test]
fn trace_contains_the_ninth_image() {
    let out = run(&["trace", "-2,-2,-2,-1,-1,-1,1,1,1", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("-3 -2 -2\n-2 -1 -1\n 1  1  3"),
        "missing ninth image in:\n{text}"
    );
    assert!(text.contains("m = 21"));
}

#[test]
fn trace_of_a_short_row() {
    let out = run(&["trace", "-1,1", "--n", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("step 0:"));
    assert!(text.contains("step 1:"));
    assert!(!text.contains("step 2:"));
}

#[test]
fn trace_of_a_terminal_column_has_no_steps() {
    let out = run(&["cocyc-c", "-2;-1;1;2", "--trace"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("step 0:"));
    assert!(!text.contains("step 1:"));
}

#[test]
fn verify_small_ranges_pass() {
    let out = run(&["verify", "--n-max", "1", "--p-max", "4"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    // Degenerate range: nothing to check, still a clean exit.
    let out = run(&["--json", "verify", "--n-max", "0", "--p-max", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[]");

    // The guard rejects out-of-range requests.
    let out = run(&["verify", "--n-max", "4", "--p-max", "8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn outputs_are_deterministic() {
    let first = run(&["kostka", "--n", "2", "--lambda", "6", "--mu", "2", "--method", "oracle"]);
    let second = run(&["kostka", "--n", "2", "--lambda", "6", "--mu", "2", "--method", "oracle"]);
    assert_eq!(first.stdout, second.stdout);

    let first = run(&["enumerate", "--n", "2", "--p", "4", "--mu", "2"]);
    let second = run(&["enumerate", "--n", "2", "--p", "4", "--mu", "2"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn bad_inputs_exit_nonzero() {
    let out = run(&["cocyc-a", "not a tableau"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    let out = run(&["charge-a", "2,2,1"]);
    assert_eq!(out.status.code(), Some(2));

    // Cocyclage of a tableau whose weight equals its shape is undefined.
    let out = run(&["cocyc-a", "1,1;2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["tk", "--n", "2", "--k-vec", "1", "--mu", "", "--step", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_lists_k_vectors() {
    let out = run(&["--json", "enumerate", "--n", "2", "--p", "2", "--mu", ""]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "[{\"k\":[0, 1],\"row\":\"-2,2\"},{\"k\":[1, 0],\"row\":\"-1,1\"}]"
    );
}
