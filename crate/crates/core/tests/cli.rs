//! Drives the `galois` binary end to end.

use std::process::Command;

use galois::cli::JsonReport;
use galois::combinators::{unwords_join, words_split};
use galois::{Seq, Value, Verdict};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn galois(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_galois"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(args: &[&str]) -> (i32, JsonReport) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let run = galois(&all);
    let report = serde_json::from_str(&run.stdout)
        .unwrap_or_else(|e| panic!("{e}: {:?} {:?}", run.stdout, run.stderr));
    (run.code, report)
}

#[test]
fn take_while_spec_over_a_small_universe() {
    let (code, r) = json(&[
        "check-spec",
        "--target",
        "takeWhile",
        "--alphabet",
        "2",
        "--max-len",
        "4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.cases_checked, 3844);
    assert_eq!(r.command, "check-spec");
    assert_eq!(r.target, "takeWhile");
    assert_eq!((r.universe.alphabet_size, r.universe.max_len), (2, 4));
    assert_eq!(r.counterexample, None);
    assert_eq!(r.elapsed_ms, None);
    assert_eq!(r.tool_version, env!("CARGO_PKG_VERSION"));
}

#[test]
fn json_schema_fields() {
    let run = galois(&[
        "check-gc",
        "--target",
        "zip",
        "--max-len",
        "3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for key in [
        "command",
        "target",
        "universe",
        "cases_checked",
        "verdict",
        "counterexample",
        "elapsed_ms",
        "tool_version",
    ] {
        assert!(keys.contains(&key), "missing {key}");
    }
    assert_eq!(v["verdict"], "pass");
    assert!(v["counterexample"].is_null());
    assert!(v["elapsed_ms"].is_null());
}

#[test]
fn timing_is_opt_in() {
    let (_, r) = json(&[
        "check-spec",
        "--target",
        "take",
        "--max-len",
        "3",
        "--timing",
    ]);
    assert!(r.elapsed_ms.is_some());
}

#[test]
fn words_counterexample_round_trips() {
    let (code, r) = json(&[
        "find-counterexample",
        "--target",
        "words-unwords",
        "--alphabet",
        "2",
        "--max-len",
        "6",
    ]);
    assert_eq!(code, 1);
    assert_eq!(r.verdict, Verdict::Fail);
    let w = r.counterexample.clone().unwrap();
    let y = w.get("y").and_then(Value::as_seq_list).unwrap();
    assert_ne!(
        unwords_join(&words_split(&unwords_join(&y))),
        unwords_join(&y)
    );

    // the report parses back to the same value and re-serialises identically
    let text = serde_json::to_string_pretty(&r).unwrap() + "\n";
    let again = galois(&[
        "find-counterexample",
        "--target",
        "words-unwords",
        "--max-len",
        "6",
        "--format",
        "json",
    ]);
    assert_eq!(again.stdout, text);
}

#[test]
fn counterexample_values_feed_back_as_input() {
    let (_, r) = json(&[
        "find-counterexample",
        "--target",
        "lines-unlines",
        "--max-len",
        "6",
    ]);
    let x = r
        .counterexample
        .unwrap()
        .get("x")
        .and_then(Value::as_seq)
        .cloned()
        .unwrap();
    let encoded = x.to_string();
    let run = galois(&[
        "oracle",
        "--target",
        "takeWhile",
        "--pred",
        "0b11",
        "--input",
        &encoded,
    ]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert!(run.stdout.contains(&format!("result: [{x}]")));
}

#[test]
fn oracle_prints_the_value() {
    let (code, r) = json(&[
        "oracle", "--target", "filter", "--pred", "0b01", "--input", "1,0,1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r.result, Some(Value::Seq(Seq::from_ids(&[0]))));
    let (code, r) = json(&[
        "oracle",
        "--target",
        "zip",
        "--alphabet",
        "3",
        "--input",
        "1,2;0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r.result.unwrap().to_string(), "[(1,0)]");
    let run = galois(&["oracle", "--target", "take", "--n", "2", "--input", "1,1,0"]);
    assert_eq!(run.stdout.lines().nth(1), Some("result: [1,1]"));
}

#[test]
fn exit_status_contract() {
    assert_eq!(
        galois(&["check-order", "--target", "sublist", "--max-len", "3"]).code,
        0
    );
    assert_eq!(
        galois(&["check-gc", "--target", "words-unwords", "--max-len", "3"]).code,
        1
    );
    assert_eq!(
        galois(&[
            "check-laws",
            "--target",
            "injective-adjoint",
            "--max-len",
            "3"
        ])
        .code,
        0
    );
    let usage = [
        vec!["check-order"],
        vec!["check-order", "--target", "nope"],
        vec!["check-laws", "--target", "monotonicity"],
        vec!["check-order", "--target", "prefix", "--alphabet", "0"],
        vec!["check-order", "--target", "prefix", "--format", "xml"],
        vec!["check-order", "--target", "pair-prefix", "--alphabet", "3"],
        vec!["check-spec", "--target", "zip", "--budget", "1000"],
        vec!["oracle", "--target", "filter", "--input", "1,0"],
        vec!["oracle", "--target", "zip", "--input", "1,0"],
        vec!["oracle", "--target", "take", "--n", "1", "--input", "a,b"],
        vec!["bogus-command"],
    ];
    for args in usage {
        let run = galois(&args);
        assert_eq!(run.code, 2, "{args:?}: {}", run.stdout);
        assert!(run.stdout.is_empty(), "{args:?}");
        assert!(!run.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn raised_budget_admits_large_orders() {
    let run = galois(&[
        "check-order",
        "--target",
        "product",
        "--alphabet",
        "3",
        "--max-len",
        "4",
        "--budget",
        "1e9",
    ]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert!(run
        .stdout
        .starts_with("pass check-order product (k=3, L=4)"));
    assert!(run.stdout.contains("least element: (0, [])"));
}

#[test]
fn text_report_lists_the_witness() {
    let run = galois(&["check-spec", "--target", "dropWhile", "--max-len", "2"]);
    assert_eq!(run.code, 1);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert!(lines[0].starts_with("fail check-spec dropWhile (k=2, L=2): "));
    assert_eq!(lines[1], "counterexample to easy-hard:dropWhile");
    assert!(lines.contains(&"  p = 0b1"));
    assert!(lines.contains(&"  xs = [1,0]"));
    assert!(lines.contains(&"  y = [0]"));
}

#[test]
fn list_targets_is_stable() {
    let run = galois(&["list-targets"]);
    assert_eq!(run.code, 0);
    assert_eq!(
        run.stdout,
        "orders: prefix sublist suffix product pair-prefix\n\
         specs: takeWhile take filter dropWhile zip\n\
         laws: gc cancellation-left cancellation-right semi-inverse injective-adjoint idempotent fusion indirect-equality order-laws split-append\n\
         pairs: words-unwords lines-unlines\n"
    );
    assert_eq!(galois(&["list-targets"]).stdout, run.stdout);
    let v: serde_json::Value =
        serde_json::from_str(&galois(&["list-targets", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["specs"].as_array().unwrap().len(), 5);
}

#[test]
fn workers_do_not_change_reports() {
    for args in [
        ["check-spec", "--target", "dropWhile"],
        ["check-laws", "--target", "order-laws"],
        ["find-counterexample", "--target", "lines-unlines"],
    ] {
        let one = galois(&[&args[..], &["--format", "json", "--workers", "1"]].concat());
        let four = galois(&[&args[..], &["--format", "json", "--workers", "4"]].concat());
        assert_eq!(one.stdout, four.stdout, "{args:?}");
        assert_eq!(one.code, four.code);
    }
}
