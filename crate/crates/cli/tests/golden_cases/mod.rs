//! Golden-file cases for the `pfs` binary, shared by the `cli_golden` and
//! `acceptance` test targets.
#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: Option<&'static str>,
}

pub const fn case(name: &'static str, args: &'static [&'static str]) -> Case {
    Case {
        name,
        args,
        stdin: None,
    }
}

pub const CASES: &[Case] = &[
    // eval
    case("eval_dependent_peak", &["eval", "@dependent-012.json", "1"]),
    case(
        "eval_dependent_left_outer",
        &["eval", "@dependent-012.json", "-1"],
    ),
    case(
        "eval_independent_left_outer",
        &["eval", "@independent-012.json", "-1"],
    ),
    case(
        "eval_independent_rising",
        &["eval", "@independent-012.json", "0.25"],
    ),
    case("eval_non_finite_x", &["eval", "@dependent-012.json", "NaN"]),
    case("eval_bad_number", &["eval", "@dependent-012.json", "one"]),
    case("eval_unordered_doc", &["eval", "@unordered.json", "1"]),
    case("eval_unknown_kind", &["eval", "@unknown-kind.json", "1"]),
    case("eval_extra_field", &["eval", "@extra-field.json", "1"]),
    case("eval_truncated_doc", &["eval", "@truncated.json", "1"]),
    case("eval_missing_field", &["eval", "@missing-field.json", "1"]),
    case("eval_missing_file", &["eval", "@no-such-file.json", "1"]),
    Case {
        name: "eval_stdin",
        args: &["eval", "-", "1.5"],
        stdin: Some(r#"{"a":0,"b":1,"c":2,"kind":"independent"}"#),
    },
    // curve
    case(
        "curve_dependent_five",
        &[
            "curve",
            "@dependent-012.json",
            "-n",
            "5",
            "--xmin",
            "0",
            "--xmax",
            "2",
        ],
    ),
    case(
        "curve_independent_five",
        &[
            "curve",
            "@independent-012.json",
            "-n",
            "5",
            "--xmin",
            "0",
            "--xmax",
            "2",
        ],
    ),
    case(
        "curve_default_window",
        &["curve", "@independent-123.json", "-n", "7"],
    ),
    case(
        "curve_one_point",
        &["curve", "@dependent-012.json", "-n", "1"],
    ),
    case(
        "curve_empty_range",
        &["curve", "@dependent-012.json", "--xmin", "2", "--xmax", "2"],
    ),
    // classify
    case("classify_a", &["classify", "0.3", "-0.4"]),
    case("classify_b", &["classify", "0.25", "-0.75"]),
    case("classify_c", &["classify", "0.9", "-0.8"]),
    case(
        "classify_band_with_eps",
        &["classify", "0.5", "-0.49", "--eps", "0.02"],
    ),
    case("classify_mu_out_of_range", &["classify", "1.2", "-0.5"]),
    case("classify_lambda_positive", &["classify", "0.3", "0.3"]),
    case(
        "classify_bad_eps",
        &["classify", "0.3", "-0.3", "--eps", "0"],
    ),
    // cut
    case("cut_mu_half", &["cut", "@dependent-012.json", "0.5"]),
    case(
        "cut_lambda_dependent_zero",
        &["cut", "@dependent-012.json", "0", "--which", "lambda"],
    ),
    case(
        "cut_lambda_independent_half",
        &["cut", "@independent-012.json", "-0.5", "--which", "lambda"],
    ),
    case(
        "cut_mu_out_of_range",
        &["cut", "@dependent-012.json", "1.5"],
    ),
    case(
        "cut_lambda_out_of_range",
        &["cut", "@dependent-012.json", "0.5", "--which", "lambda"],
    ),
    // arith
    case(
        "arith_add_three_levels",
        &[
            "arith",
            "add",
            "@dependent-012.json",
            "@dependent-123.json",
            "--levels",
            "3",
        ],
    ),
    case(
        "arith_sub",
        &[
            "arith",
            "sub",
            "@dependent-123.json",
            "@dependent-012.json",
            "--levels",
            "5",
        ],
    ),
    case(
        "arith_mul",
        &[
            "arith",
            "mul",
            "@independent-012.json",
            "@independent-012.json",
            "--levels",
            "5",
        ],
    ),
    case(
        "arith_div",
        &[
            "arith",
            "div",
            "@dependent-123.json",
            "@dependent-124.json",
            "--levels",
            "5",
        ],
    ),
    case(
        "arith_oracle_add",
        &[
            "arith",
            "add",
            "@dependent-012.json",
            "@dependent-123.json",
            "--levels",
            "3",
            "--oracle",
            "--grid",
            "16",
        ],
    ),
    case(
        "arith_div_straddles_zero",
        &["arith", "div", "@dependent-123.json", "@straddle.json"],
    ),
    case(
        "arith_mixed_kinds",
        &[
            "arith",
            "add",
            "@dependent-012.json",
            "@independent-012.json",
        ],
    ),
    case(
        "arith_one_level",
        &[
            "arith",
            "mul",
            "@dependent-012.json",
            "@dependent-012.json",
            "--levels",
            "1",
        ],
    ),
    case(
        "arith_unknown_op",
        &["arith", "pow", "@dependent-012.json", "@dependent-012.json"],
    ),
    case("arith_two_stdin", &["arith", "add", "-", "-"]),
    // scale and point
    case(
        "scale_negative",
        &["scale", "@dependent-012.json", "-1", "--levels", "3"],
    ),
    case("scale_zero", &["scale", "@dependent-012.json", "0"]),
    case(
        "point_midpoint",
        &["point", "@dependent-012.json", "0.5", "0.5"],
    ),
    case(
        "point_out_of_range",
        &["point", "@dependent-012.json", "0.5", "2"],
    ),
    // verify
    case(
        "verify_dependent",
        &["verify", "@dependent-012.json", "--grid", "101"],
    ),
    case(
        "verify_independent",
        &["verify", "@independent-012.json", "--grid", "101"],
    ),
    case(
        "verify_table_tampered",
        &["verify", "--table", "@tampered.csv", "--kind", "dependent"],
    ),
    case(
        "verify_table_wrong_rule",
        &[
            "verify",
            "--table",
            "@tampered.csv",
            "--kind",
            "independent",
        ],
    ),
    case(
        "verify_table_out_of_range",
        &[
            "verify",
            "--table",
            "@out-of-range.csv",
            "--kind",
            "dependent",
        ],
    ),
    case(
        "verify_small_grid",
        &["verify", "@dependent-012.json", "--grid", "1"],
    ),
    case("verify_nothing", &["verify"]),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn resolve(arg: &str) -> String {
    match arg.strip_prefix('@') {
        Some(file) => crate_dir()
            .join("tests/data")
            .join(file)
            .display()
            .to_string(),
        None => arg.to_owned(),
    }
}

pub fn run(case: &Case) -> (i32, String) {
    run_with_stdin(case, case.stdin.unwrap_or(""))
}

/// Runs the binary with `stdin` fed to standard input; returns the exit code
/// and standard output.
pub fn run_with_stdin(case: &Case, stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pfs"))
        .args(case.args.iter().map(|a| resolve(a)))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn pfs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let output = child.wait_with_output().unwrap();
    let code = output.status.code().expect("exited normally");
    (code, String::from_utf8(output.stdout).unwrap())
}

fn render(code: i32, stdout: &str) -> String {
    format!("exit: {code}\n{stdout}")
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{name}.txt"))
}

pub fn check(case: &Case, update: bool) -> Result<(), String> {
    let first = run(case);
    let second = run(case);
    if first != second {
        return Err(format!("{}: reruns differ", case.name));
    }
    let actual = render(first.0, &first.1);
    let path = golden_path(case.name);
    if update {
        std::fs::write(&path, &actual).unwrap();
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path)
        .map_err(|e| format!("{}: cannot read {}: {e}", case.name, path.display()))?;
    if expected != actual {
        return Err(format!(
            "{}: output differs\n--- expected\n{expected}--- actual\n{actual}",
            case.name
        ));
    }
    Ok(())
}

/// Checks every case; returns one message per failing case.
pub fn check_all(update: bool) -> Vec<String> {
    CASES
        .iter()
        .filter_map(|c| check(c, update).err())
        .collect()
}

/// Exit codes that at least one golden case expects.
pub fn covered_exit_codes() -> std::collections::BTreeSet<i32> {
    CASES
        .iter()
        .filter_map(|c| std::fs::read_to_string(golden_path(c.name)).ok())
        .filter_map(|text| {
            text.lines()
                .next()
                .and_then(|l| l.strip_prefix("exit: "))
                .and_then(|n| n.parse().ok())
        })
        .collect()
}
