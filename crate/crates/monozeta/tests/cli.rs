//! Drives the installed binary end to end: stdout must be byte-stable, the
//! assumed-hypothesis warnings go to stderr, and exit codes follow the
//! 0/1/2 contract (success / violated precondition / parse error).

use std::io::Write;
use std::process::{Command, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_monozeta");

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn run(args: &[&str]) -> Run {
    run_with_stdin(args, None)
}

fn run_with_stdin(args: &[&str], stdin: Option<&str>) -> Run {
    let mut cmd = Command::new(BIN);
    cmd.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    if stdin.is_some() {
        cmd.stdin(Stdio::piped());
    }
    let mut child = cmd.spawn().expect("binary should spawn");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    let out = child.wait_with_output().expect("binary should finish");
    Run {
        stdout: String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        stderr: String::from_utf8(out.stderr).expect("stderr is UTF-8"),
        code: out.status.code().expect("no signal"),
    }
}

#[test]
fn zeta_infinity_worked_example() {
    let r = run(&["zeta-infinity", "x - x^2*y", "--vars", "x,y"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "1\n");
    assert_eq!(r.stderr, "warning: assuming non-degeneracy at infinity (Def 3.3)\n");
}

#[test]
fn lefschetz_worked_example() {
    let r = run(&["lefschetz", "x1*(x1^2*x2^2 - 1)", "--vars", "x1,x2", "--kmax", "5"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "-1 -1 -1 -1 -1\n");
}

#[test]
fn zeta_fiber_json_worked_example() {
    let r = run(&["zeta-fiber", "x - x^2*y", "--vars", "x,y", "--value", "0", "--route", "B", "--json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["factors"], serde_json::json!([]));
    assert_eq!(v["degree"], serde_json::json!(0));
    assert_eq!(v["display"], serde_json::json!("1"));
}

#[test]
fn warnings_are_silenced_by_acknowledgement() {
    let r = run(&["zeta-infinity", "x - x^2*y", "--vars", "x,y", "--assume-nondegenerate"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stderr, "");

    let r = run(&["zeta-fiber", "x^2 + y^2 - 1", "--vars", "x,y", "--central"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stderr, "warning: assuming strict non-degeneracy along the fiber (Def 4.7)\n");
}

#[test]
fn strict_mode_refuses_assumed_hypotheses() {
    let r = run(&["zeta-infinity", "x - x^2*y", "--vars", "x,y", "--strict"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.stdout, "");
    assert!(r.stderr.contains("--strict refuses to assume non-degeneracy at infinity (Def 3.3)"));
}

#[test]
fn parse_errors_exit_2() {
    let r = run(&["zeta-infinity", "x + @", "--vars", "x"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("parse error"));

    let r = run(&["zeta-fiber", "x", "--vars", "x", "--value", "q"]);
    assert_eq!(r.code, 2);

    let r = run(&["zeta-infinity"]);
    assert_eq!(r.code, 2, "missing arguments are usage errors");
}

#[test]
fn precondition_errors_exit_1_and_name_the_rule() {
    let r = run(&["euler", "x", "--vars", "x,y", "--assume-nondegenerate"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("condition (*) fails (Def 3.2)"));

    let r = run(&["zeta-infinity", "7", "--vars", "x", "--assume-nondegenerate"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("non-constant"));
}

#[test]
fn euler_and_jump_text_output() {
    let r = run(&["euler", "x - x^2*y", "--vars", "x,y", "--assume-nondegenerate"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "0\n"));

    let r = run(&["jump", "x - x^2*y", "--vars", "x,y", "--assume-nondegenerate"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "1\n"));

    let r = run(&["jump", "x - x^2*y", "--vars", "x,y", "--mu", "1", "--assume-nondegenerate", "--json"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "{\"jump\":2}\n"));
}

#[test]
fn varchenko_display_and_degree() {
    let r = run(&["varchenko", "x^2 + y^3", "--vars", "x,y", "--assume-nondegenerate"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "(1-t^2)(1-t^3)(1-t^6)^-1\n"));

    let r = run(&["varchenko", "x*y", "--vars", "x,y", "--assume-nondegenerate"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "1\n"));
}

#[test]
fn polytope_bodies_and_subset() {
    let r = run(&["polytope", "x - x^2*y", "--vars", "x,y", "--which", "gamma-inf", "--json"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "{\"ambient_dim\":2,\"points\":[[0,0],[1,0],[2,1]]}\n");

    let r = run(&["polytope", "x - x^2*y + 5", "--vars", "x,y", "--which", "np", "--json"]);
    assert_eq!(r.stdout, "{\"ambient_dim\":2,\"points\":[[1,0],[2,1]]}\n");

    let r = run(&["polytope", "x - x^2*y", "--vars", "x,y", "--which", "bif", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert!(v.get("rays").is_some(), "polyhedra carry a rays field");

    let r = run(&["polytope", "x - x^2*y", "--vars", "x,y", "--which", "gamma-inf", "--subset", "1", "--json"]);
    assert_eq!(r.stdout, "{\"ambient_dim\":2,\"points\":[[0,0],[1,0]]}\n");

    let r = run(&["polytope", "x", "--vars", "x", "--which", "np", "--subset", "0"]);
    assert_eq!(r.code, 1, "subset indices are 1-based");
}

#[test]
fn mixed_volume_reads_stdin() {
    let bodies = r#"[{"ambient_dim":2,"points":[[0,0],[1,0],[0,1]]},
                     {"ambient_dim":2,"points":[[0,0],[2,0],[0,2]]}]"#;
    let r = run_with_stdin(&["mixed-volume"], Some(bodies));
    assert_eq!((r.code, r.stdout.as_str()), (0, "2\n"));

    let r = run_with_stdin(&["mixed-volume"], Some("not json"));
    assert_eq!(r.code, 2);
}

#[test]
fn ci_subcommands_match_library_values() {
    let pair = &["-f", "x + y + 1", "-f", "x^2 + y^2", "--vars", "x,y", "--assume-nondegenerate"];

    let mut args = vec!["ci-zeta-infinity"];
    args.extend_from_slice(pair);
    let r = run(&args);
    assert_eq!((r.code, r.stdout.as_str()), (0, "(1-t^2)\n"));

    let mut args = vec!["ci-euler"];
    args.extend_from_slice(pair);
    let r = run(&args);
    assert_eq!((r.code, r.stdout.as_str()), (0, "2\n"));

    for route in ["A", "B"] {
        let mut args = vec!["ci-zeta-fiber"];
        args.extend_from_slice(pair);
        args.extend_from_slice(&["--central", "--route", route]);
        let r = run(&args);
        assert_eq!((r.code, r.stdout.as_str()), (0, "(1-t)^2\n"), "route {}", route);
    }

    let mut args = vec!["ci-zeta-fiber"];
    args.extend_from_slice(pair);
    args.extend_from_slice(&["--value", "5"]);
    let r = run(&args);
    assert_eq!((r.code, r.stdout.as_str()), (0, "(1-t)^2\n"));
}

#[test]
fn fiber_value_selection_rules() {
    let r = run(&["zeta-fiber", "x - x^2*y", "--vars", "x,y", "--assume-nondegenerate"]);
    assert_eq!(r.code, 1, "one of --value/--central is required");

    let r = run(&[
        "zeta-fiber", "x - x^2*y", "--vars", "x,y", "--value", "0", "--central",
    ]);
    assert_eq!(r.code, 2, "--value and --central conflict");

    let r = run(&["zeta-fiber", "x - x^2*y", "--vars", "x,y", "--central", "--assume-nondegenerate"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "1\n"));
}

#[test]
fn output_is_deterministic() {
    let args = ["ci-zeta-infinity", "-f", "x + y + 1", "-f", "x^2 + y^2", "--vars", "x,y", "--json"];
    let first = run(&args);
    for _ in 0..3 {
        let again = run(&args);
        assert_eq!(again.stdout, first.stdout);
        assert_eq!(again.stderr, first.stderr);
    }
}
