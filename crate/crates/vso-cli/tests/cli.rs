//! End-to-end checks of the `vso` binary: suites, single functions, report
//! formats, trace files, error paths, and the subprocess objective.

use std::fs;
use std::process::{Command, Output};

fn vso(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vso"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

const CSV_HEADER: &str =
    "id,label,nd,algo,best,n_eval,last_iteration,found_at_iteration,fmax,\
     published_best,published_n_eval,verdict,detail";

#[test]
fn six_function_suite_reports_every_dimension_and_passes() {
    let out = vso(&["run", "--algo", "vso", "--suite", "vpso"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1 + 18, "header plus 6 functions x 3 dims");
    assert_eq!(lines[0], CSV_HEADER);
    assert!(lines[1..].iter().all(|l| !l.contains(",fail,")), "{text}");
}

#[test]
fn single_function_emits_one_data_row() {
    let out = vso(&["run", "--fn", "vpso/ackley", "--nd", "10"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 2);
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("vpso/ackley,"), "{row}");
    assert!(row.contains(",9800,"), "published count echoed: {row}");
    assert!(row.contains(",pass,"), "{row}");
}

#[test]
fn dimension_override_narrows_the_suite() {
    let out = vso(&["run", "--suite", "vpso", "--nd", "10"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    assert_eq!(stdout_of(&out).lines().count(), 1 + 6);
}

#[test]
fn repeated_invocations_are_byte_identical() {
    let args = ["run", "--suite", "vpso", "--nd", "10"];
    let first = vso(&args);
    let second = vso(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn config_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["run", "--fn", "gso/f99"],
        &["run", "--suite", "vpso", "--nd", "12"],
        &["run", "--fn", "gso/f16", "--nd", "3"],
        &["run", "--suite", "vpso", "--trace", "/tmp/unused-trace"],
        &["run"],
        &["run", "--fn", "vpso/ackley", "--nd", "10", "--rho", "1.5"],
    ];
    for args in cases {
        let out = vso(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}: {}", stderr_of(&out));
    }
    let unknown = vso(&["run", "--fn", "gso/f99"]);
    assert!(
        stderr_of(&unknown).contains("unknown function id"),
        "{}",
        stderr_of(&unknown)
    );
}

#[test]
fn markdown_report_prints_published_figures_verbatim() {
    let out = vso(&["run", "--fn", "gso/f8", "--emit", "markdown"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("| function |"), "{text}");
    // The optimum and the published best keep their printed formatting,
    // thousands separator included.
    assert!(text.contains("12,569.5"), "{text}");
    assert!(text.contains("12,569.4866"), "{text}");
    assert!(text.contains("## Published comparators"), "{text}");
}

#[test]
fn jsonl_rows_parse_with_stable_keys() {
    let out = vso(&["run", "--fn", "vpso/ackley", "--nd", "10", "--emit", "jsonl"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 1);
    let row: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(row["id"], "vpso/ackley");
    assert_eq!(row["nd"], 10);
    assert_eq!(row["n_eval"], 9800);
    assert_eq!(row["verdict"], "pass");
    assert_eq!(row["seed"], 42);
    assert!(row["best"].is_f64());
    assert_eq!(row["x"].as_array().map(Vec::len), Some(10));
    assert!(row["error"].is_null());
}

#[test]
fn trace_file_lists_best_fitness_per_iteration() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trace.txt");
    let out = vso(&[
        "run",
        "--fn",
        "vpso/exponential",
        "--nd",
        "10",
        "--trace",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let body = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = body.lines().collect();
    // A run that saturates immediately still walks to the first checkpoint.
    assert_eq!(lines.len(), 7, "{body}");
    let mut prev = f64::NEG_INFINITY;
    for (i, line) in lines.iter().enumerate() {
        let mut cols = line.split_whitespace();
        assert_eq!(cols.next().unwrap().parse::<usize>().unwrap(), i);
        let f: f64 = cols.next().unwrap().parse().unwrap();
        assert!(cols.next().is_none(), "two columns only: {line}");
        assert!(f >= prev, "best fitness never regresses: {body}");
        prev = f;
    }
}

#[test]
fn report_goes_to_the_requested_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = vso(&[
        "run",
        "--fn",
        "vpso/ackley",
        "--nd",
        "10",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    assert!(stdout_of(&out).is_empty());
    let body = fs::read_to_string(&path).unwrap();
    assert!(body.starts_with("id,label,"), "{body}");
    assert_eq!(body.lines().count(), 2);
}

#[test]
fn external_command_is_searched_and_best_point_snapshotted() {
    let dir = tempfile::tempdir().unwrap();
    let shim = dir.path().join("sphere.sh");
    fs::write(
        &shim,
        "#!/bin/sh\nawk '{ s += $1 * $1 } END { printf \"%.17e\\n\", -s }' \"$1\" > \"$2\"\n",
    )
    .unwrap();
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        fs::set_permissions(&shim, fs::Permissions::from_mode(0o755)).unwrap();
    }
    let input = dir.path().join("point.txt");
    let output = dir.path().join("fitness.txt");
    let best = dir.path().join("best.txt");

    let out = vso(&[
        "run",
        "--external-cmd",
        shim.to_str().unwrap(),
        "--external-arg",
        input.to_str().unwrap(),
        "--external-arg",
        output.to_str().unwrap(),
        "--external-in",
        input.to_str().unwrap(),
        "--external-out",
        output.to_str().unwrap(),
        "--nd",
        "1",
        "--external-bounds=-3:3",
        "--snapshot-best",
        best.to_str().unwrap(),
        "--emit",
        "jsonl",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let row: serde_json::Value =
        serde_json::from_str(stdout_of(&out).lines().next().unwrap()).unwrap();
    assert_eq!(row["id"], "external");
    assert_eq!(row["verdict"], "no-reference");
    // Sphere on [-3, 3]: the maximum is 0 at the origin.
    assert!(row["best"].as_f64().unwrap() > -1e-6, "{row}");

    let snapshot = fs::read_to_string(&best).unwrap();
    let coord: f64 = snapshot.lines().next().unwrap().trim().parse().unwrap();
    assert!(coord.abs() < 1e-3, "best point snapshot near origin: {snapshot}");
}

#[test]
fn sahc_single_function_accepts_run_controls() {
    let out = vso(&[
        "run",
        "--algo",
        "sahc",
        "--fn",
        "vpso/exponential",
        "--nd",
        "10",
        "--runs",
        "2",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("no-reference"), "no published row at 2 runs: {text}");

    let reset = vso(&[
        "run",
        "--algo",
        "sahc",
        "--fn",
        "vpso/exponential",
        "--nd",
        "10",
        "--runs",
        "2",
        "--reset-per-run",
    ]);
    assert_eq!(reset.status.code(), Some(0), "{}", stderr_of(&reset));
}
