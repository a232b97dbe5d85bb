use std::process::Command;

use serialrank_cli::run_captured;

fn binary(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_serialrank"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
        output.status.code().expect("exited normally"),
    )
}

fn ok(args: &[&str]) -> String {
    let (out, err, code) = run_captured(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out
}

fn usage_error(args: &[&str]) -> String {
    let (out, err, code) = run_captured(args);
    assert_eq!(code, 2, "{args:?} should be rejected, got {out}");
    err
}

#[test]
fn count_examples() {
    assert_eq!(
        ok(&["count", "--family", "permutation", "--n", "4"]),
        "24\n"
    );
    assert_eq!(
        ok(&["count", "--family", "setpartition", "--n", "6"]),
        "203\n"
    );
    assert_eq!(
        ok(&["count", "--family", "composition", "--n", "7", "--k", "5"]),
        "330\n"
    );
    assert_eq!(
        ok(&["count", "--family", "ksubset", "--n", "4", "--k", "2"]),
        "6\n"
    );
    assert_eq!(ok(&["count", "--family", "subset", "--n", "0"]), "1\n");
    assert_eq!(
        ok(&["count", "--family", "permutation", "--n", "25"]),
        "15511210043330985984000000\n"
    );
}

#[test]
fn unrank_examples() {
    assert_eq!(
        ok(&[
            "unrank",
            "--family",
            "permutation",
            "--n",
            "4",
            "--serial",
            "7"
        ]),
        "4,2,1,3\n"
    );
    assert_eq!(
        ok(&[
            "unrank",
            "--family",
            "setpartition",
            "--n",
            "5",
            "--serial",
            "26",
            "--stylized"
        ]),
        "(1, 4, 5)(2, 3)\n"
    );
    assert_eq!(
        ok(&[
            "unrank",
            "--family",
            "setpartition",
            "--n",
            "5",
            "--serial",
            "26"
        ]),
        "0,1,1,0,0\n"
    );
    assert_eq!(
        ok(&[
            "unrank",
            "--family",
            "composition",
            "--n",
            "7",
            "--k",
            "5",
            "--serial",
            "283"
        ]),
        "1,0,2,1,3\n"
    );
    assert_eq!(
        ok(&["unrank", "--family", "ksubset", "--n", "4", "--k", "0", "--serial", "1"]),
        "\n"
    );
}

#[test]
fn rank_examples() {
    assert_eq!(
        ok(&["rank", "--family", "permutation", "--vector", "3,2,4,1"]),
        "23\n"
    );
    assert_eq!(
        ok(&["rank", "--family", "subset", "--n", "3", "--vector", "0,1,1"]),
        "5\n"
    );
    assert_eq!(
        ok(&["rank", "--family", "ksubset", "--n", "4", "--k", "2", "--vector", "2,3"]),
        "4\n"
    );
    assert_eq!(
        ok(&["rank", "--family", "ksubset", "--n", "4", "--vector", "2,3"]),
        "4\n"
    );
    assert_eq!(
        ok(&["rank", "--family", "composition", "--vector", "1,0,2,1,3"]),
        "283\n"
    );
    assert_eq!(
        ok(&["rank", "--family", "setpartition", "--vector", "0,1,1,0,0"]),
        "26\n"
    );
}

#[test]
fn range_examples() {
    assert_eq!(
        ok(&[
            "range",
            "--family",
            "permutation",
            "--n",
            "4",
            "--from",
            "1",
            "--to",
            "3"
        ]),
        "1,2,3,4\n2,1,3,4\n3,1,2,4\n"
    );
    assert_eq!(
        ok(&["range", "--family", "subset", "--n", "2", "--from", "1", "--to", "4"]),
        "0,0\n1,0\n1,1\n0,1\n"
    );
    for (family, extra) in [
        ("permutation", vec![]),
        ("composition", vec!["--k", "3"]),
        ("setpartition", vec![]),
        ("ksubset", vec!["--k", "2"]),
        ("subset", vec![]),
    ] {
        let mut args = vec![
            "range", "--family", family, "--n", "4", "--from", "1", "--to", "1",
        ];
        args.extend(extra.iter().copied());
        let mut unrank = vec!["unrank", "--family", family, "--n", "4", "--serial", "1"];
        unrank.extend(extra.iter().copied());
        assert_eq!(ok(&args), ok(&unrank), "{family}");
    }
}

#[test]
fn range_streams_in_serial_order() {
    let out = ok(&[
        "range",
        "--family",
        "setpartition",
        "--n",
        "5",
        "--from",
        "1",
        "--to",
        "52",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 52);
    assert_eq!(lines[25], "0,1,1,0,0");
    assert_eq!(lines[51], "0,1,2,3,4");
    let styled = ok(&[
        "range",
        "--family",
        "setpartition",
        "--n",
        "3",
        "--from",
        "1",
        "--to",
        "5",
        "--stylized",
    ]);
    assert_eq!(
        styled,
        "(1, 2, 3)\n(1, 2)(3)\n(1, 3)(2)\n(1)(2, 3)\n(1)(2)(3)\n"
    );
}

#[test]
fn json_lines() {
    let out = ok(&[
        "unrank",
        "--family",
        "setpartition",
        "--n",
        "5",
        "--serial",
        "26",
        "--format",
        "json",
    ]);
    assert_eq!(
        out,
        "{\"family\":\"setpartition\",\"n\":5,\"k\":null,\"serial\":\"26\",\"vector\":[0,1,1,0,0],\"stylized\":\"(1, 4, 5)(2, 3)\"}\n"
    );
    let out = ok(&[
        "range", "--family", "ksubset", "--n", "4", "--k", "2", "--from", "3", "--to", "4",
        "--format", "json",
    ]);
    let records: Vec<serde_json::Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 2);
    assert_eq!(records[1]["serial"], "4");
    assert_eq!(records[1]["vector"], serde_json::json!([2, 3]));
    assert_eq!(records[1]["k"], 2);
    assert!(records[1].get("stylized").is_none());

    let out = ok(&[
        "rank",
        "--family",
        "permutation",
        "--vector",
        "3,2,4,1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["serial"], "23");
    assert_eq!(v["n"], 4);

    let out = ok(&[
        "count", "--family", "subset", "--n", "3", "--format", "json",
    ]);
    assert_eq!(
        out,
        "{\"family\":\"subset\",\"n\":3,\"k\":null,\"count\":\"8\"}\n"
    );
}

#[test]
fn validation_errors_exit_2() {
    let err = usage_error(&[
        "unrank",
        "--family",
        "permutation",
        "--n",
        "4",
        "--serial",
        "25",
    ]);
    assert!(err.contains("out of range"), "{err}");
    usage_error(&[
        "unrank",
        "--family",
        "permutation",
        "--n",
        "4",
        "--serial",
        "0",
    ]);
    usage_error(&[
        "unrank",
        "--family",
        "permutation",
        "--n",
        "4",
        "--serial",
        "x",
    ]);
    usage_error(&["count", "--family", "composition", "--n", "4"]);
    usage_error(&["count", "--family", "subset", "--n", "4", "--k", "2"]);
    usage_error(&["count", "--family", "ksubset", "--n", "2", "--k", "3"]);
    usage_error(&["count", "--family", "permutation", "--n", "0"]);
    usage_error(&["count", "--family", "bogus", "--n", "3"]);
    let err = usage_error(&["rank", "--family", "permutation", "--vector", "1,1,2"]);
    assert!(err.contains("more than once"), "{err}");
    let err = usage_error(&["rank", "--family", "setpartition", "--vector", "0,2"]);
    assert!(err.contains("restricted growth"), "{err}");
    let err = usage_error(&["rank", "--family", "subset", "--vector", "0,2"]);
    assert!(err.contains("expected 0 or 1"), "{err}");
    let err = usage_error(&[
        "rank",
        "--family",
        "composition",
        "--n",
        "5",
        "--vector",
        "1,2",
    ]);
    assert!(err.contains("sum to 3"), "{err}");
    usage_error(&["rank", "--family", "ksubset", "--vector", "1,2"]);
    usage_error(&["rank", "--family", "ksubset", "--n", "4", "--vector", "3,2"]);
    usage_error(&[
        "rank",
        "--family",
        "permutation",
        "--n",
        "5",
        "--vector",
        "1,2",
    ]);
    usage_error(&["rank", "--family", "permutation", "--vector", "1,a"]);
    usage_error(&[
        "range", "--family", "subset", "--n", "2", "--from", "3", "--to", "2",
    ]);
    usage_error(&[
        "range", "--family", "subset", "--n", "2", "--from", "1", "--to", "5",
    ]);
    usage_error(&["unrank", "--family", "subset", "--n", "2"]);
}

#[test]
fn selftest_passes() {
    let (out, _, code) = run_captured(&["selftest"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("all checks passed\n"));
}

#[test]
fn binary_exit_codes_and_determinism() {
    let first = binary(&["selftest"]);
    let second = binary(&["selftest"]);
    assert_eq!(first.2, 0);
    assert_eq!(first, second);

    let (out, _, code) = binary(&[
        "unrank",
        "--family",
        "permutation",
        "--n",
        "4",
        "--serial",
        "7",
    ]);
    assert_eq!((out.as_str(), code), ("4,2,1,3\n", 0));

    let (_, err, code) = binary(&[
        "unrank",
        "--family",
        "permutation",
        "--n",
        "4",
        "--serial",
        "99",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("out of range"));

    let (_, _, code) = binary(&["count", "--family", "permutation"]);
    assert_eq!(code, 2);

    let a = binary(&[
        "range",
        "--family",
        "composition",
        "--n",
        "5",
        "--k",
        "3",
        "--from",
        "1",
        "--to",
        "21",
    ]);
    let b = binary(&[
        "range",
        "--family",
        "composition",
        "--n",
        "5",
        "--k",
        "3",
        "--from",
        "1",
        "--to",
        "21",
    ]);
    assert_eq!(a, b);
}

#[test]
fn text_round_trip_all_families() {
    let shapes: [(&str, &str, Option<&str>, u64); 5] = [
        ("permutation", "4", None, 24),
        ("composition", "4", Some("3"), 15),
        ("setpartition", "4", None, 15),
        ("ksubset", "5", Some("2"), 10),
        ("subset", "4", None, 16),
    ];
    for (family, n, k, count) in shapes {
        for s in 1..=count {
            let s = s.to_string();
            let mut unrank = vec!["unrank", "--family", family, "--n", n, "--serial", &s];
            let mut rank = vec!["rank", "--family", family, "--n", n];
            if let Some(k) = k {
                unrank.extend(["--k", k]);
                rank.extend(["--k", k]);
            }
            let vector = ok(&unrank);
            let vector = vector.trim_end_matches('\n');
            rank.extend(["--vector", vector]);
            assert_eq!(ok(&rank), format!("{s}\n"), "{family} {vector}");
        }
    }
}

#[test]
fn huge_serials() {
    let out = ok(&[
        "unrank",
        "--family",
        "permutation",
        "--n",
        "25",
        "--serial",
        "15511210043330985984000000",
    ]);
    let vector = out.trim_end();
    assert_eq!(
        ok(&["rank", "--family", "permutation", "--vector", vector]),
        "15511210043330985984000000\n"
    );
}
