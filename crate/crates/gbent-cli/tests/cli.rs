//! End-to-end tests of the `gbent` binary: exit-code contract, format
//! determinism, and the construct/analyze round trip.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gbent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gbent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn gbent_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gbent"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const ZERO_TABLE: &str = "3 1 2 2\n0 0 0 0 0 0 0 0 0\n";

#[test]
fn no_args_prints_usage_and_exits_2() {
    let out = gbent(&[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_error_exits_2() {
    let out = gbent_stdin(&["analyze", "-"], "4 1 1 1\n0 0 0 0\n");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("odd prime"), "stderr was: {err}");
}

#[test]
fn analyze_non_gbent_exits_1() {
    let out = gbent_stdin(&["analyze", "-"], ZERO_TABLE);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("gbent: false"));
}

#[test]
fn construct_then_analyze_verifies() {
    let spread = gbent(&["construct", "--spread", "3", "2", "2"]);
    assert_eq!(spread.status.code(), Some(0));
    let table = stdout_of(&spread);

    let analyzed = gbent_stdin(&["analyze", "-"], &table);
    assert_eq!(analyzed.status.code(), Some(0));
    assert!(stdout_of(&analyzed).contains("regularity: regular"));

    let zpk = gbent_stdin(&["zpkbent", "-"], &table);
    assert_eq!(zpk.status.code(), Some(0));

    let rds = gbent_stdin(&["rds", "-"], &table);
    assert_eq!(rds.status.code(), Some(0));
    assert!(stdout_of(&rds).contains("(81, 9, 81, 9)"));

    let gray = gbent_stdin(&["gray", "-"], &table);
    assert_eq!(gray.status.code(), Some(0));
    assert!(stdout_of(&gray).contains("1-plateaued"));
}

#[test]
fn structured_output_is_byte_identical() {
    let a = gbent_stdin(&["analyze", "--format", "structured", "-"], ZERO_TABLE);
    let b = gbent_stdin(&["analyze", "--format", "structured", "-"], ZERO_TABLE);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout_of(&a);
    assert!(text.starts_with('{') && text.trim_end().ends_with('}'));
}

#[test]
fn characterize_mode_d_on_quad_witness() {
    let quad = gbent(&["construct", "--quad", "3", "2", "3", "1"]);
    assert_eq!(quad.status.code(), Some(0));
    let table = stdout_of(&quad);

    let out = gbent_stdin(&["characterize", "--mode", "D", "-"], &table);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("verdict=true agrees-with-gbent=true"), "got: {text}");
}

#[test]
fn characterize_bad_params_exit_2() {
    let out = gbent_stdin(&["characterize", "--mode", "C", "--t", "3", "-"], ZERO_TABLE);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lift_construct_reads_p_ary_table() {
    // x_1·x_2 on Z_3², then lift to Z_9
    let dir = std::env::temp_dir().join("gbent-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("product.tbl");
    std::fs::write(&path, "3 1 2 1\n0 0 0 0 1 2 0 2 1\n").unwrap();

    let lift = gbent(&["construct", "--lift", "2", path.to_str().unwrap()]);
    assert_eq!(lift.status.code(), Some(0));
    let table = stdout_of(&lift);
    assert!(table.starts_with("3 1 2 2\n"));

    // gbent, but not an RDS graph: rds must exit 1
    let analyzed = gbent_stdin(&["analyze", "-"], &table);
    assert_eq!(analyzed.status.code(), Some(0));
    let rds = gbent_stdin(&["rds", "-"], &table);
    assert_eq!(rds.status.code(), Some(1));
}

#[test]
fn selftest_passes() {
    let out = gbent(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("all suites passed"), "got: {text}");
}
