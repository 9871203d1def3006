//! End-to-end runs of the binary: file parsing, exit codes, output
//! shapes, and byte-determinism.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn write_matrix(dir: &Path, name: &str, contents: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

fn detkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_detkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn adjoint_of_swap_matrix_over_gf7() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_matrix(dir.path(), "swap.txt", "2\n0 1\n1 0\n");
    let out = detkit(&[
        "adjoint",
        "--field",
        "gf:7",
        "--mode",
        "krylov",
        "--seed",
        "1",
        "--check",
        "--json",
        m.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(
        stdout(&out).trim(),
        r#"{"n":2,"mode":"krylov","det":"6","adjoint":[["0","6"],["6","0"]],"division_violations":0,"seed":1,"checked":true}"#
    );
}

#[test]
fn integer_determinant_division_free() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_matrix(dir.path(), "m.txt", "2\n1 2\n3 4\n");
    let out = detkit(&[
        "det",
        "--field",
        "int",
        "--mode",
        "division-free",
        "--json",
        m.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains(r#""det":"-2""#), "{text}");
    assert!(text.contains(r#""division_violations":0"#), "{text}");
}

#[test]
fn negative_entries_reduce_into_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_matrix(dir.path(), "neg.txt", "1\n-5\n");
    let out = detkit(&[
        "det",
        "--field",
        "gf:7",
        "--mode",
        "oracle",
        m.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("det = 2"), "{}", stdout(&out));
}

#[test]
fn derogatory_input_exits_2_and_points_to_division_free() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_matrix(dir.path(), "id.txt", "3\n1 0 0\n0 1 0\n0 0 1\n");
    let out = detkit(&[
        "adjoint",
        "--field",
        "gf:7",
        "--mode",
        "krylov",
        m.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("division-free"), "{}", stderr(&out));
    // and division-free mode serves the same input
    let out = detkit(&[
        "adjoint",
        "--field",
        "gf:7",
        "--mode",
        "division-free",
        m.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("det = 1"), "{}", stdout(&out));
}

#[test]
fn identical_config_and_seed_give_byte_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_matrix(
        dir.path(),
        "r.txt",
        "4\n3 1 4 1\n5 9 2 6\n5 3 5 8\n9 7 9 3\n",
    );
    let args = [
        "adjoint",
        "--field",
        "gf:10007",
        "--mode",
        "krylov",
        "--seed",
        "42",
        "--check",
        "--json",
        m.to_str().unwrap(),
    ];
    let first = detkit(&args);
    let second = detkit(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn partial_eval_output_is_bit_identical() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_matrix(dir.path(), "z.txt", "3\n2 -7 0\n4 4 -9\n1 0 3\n");
    let plain = detkit(&["adjoint", "--field", "int", "--json", m.to_str().unwrap()]);
    let scheduled = detkit(&[
        "adjoint",
        "--field",
        "int",
        "--partial-eval",
        "--json",
        m.to_str().unwrap(),
    ]);
    assert_eq!(plain.status.code(), Some(0));
    assert_eq!(scheduled.status.code(), Some(0));
    assert_eq!(plain.stdout, scheduled.stdout);
}

#[test]
fn inverse_series_matches_the_file_format() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_matrix(dir.path(), "p.txt", "2\n1:1 0:0\n0:0 1:1\n");
    let out = detkit(&[
        "inverse-series",
        "--field",
        "gf:7",
        "--trunc",
        "3",
        "--check",
        "--json",
        m.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    // (1+z)^-1 = 1 - z + z^2 - z^3 = 1:6:1:6 over GF(7)
    let text = stdout(&out);
    assert!(
        text.contains(r#""inverse":[["1:6:1:6","0:0:0:0"],["0:0:0:0","1:6:1:6"]]"#),
        "{text}"
    );
}

#[test]
fn singular_leading_matrix_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_matrix(dir.path(), "s.txt", "2\n0:1 0:0\n0:0 0:1\n");
    let out = detkit(&[
        "inverse-series",
        "--field",
        "gf:7",
        "--trunc",
        "2",
        m.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_errors_exit_3_with_positions() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_matrix(dir.path(), "bad.txt", "2\n1 x\n3 4\n");
    let out = detkit(&["det", "--field", "int", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("line 2, entry 2"), "{}", stderr(&out));

    let ragged = write_matrix(dir.path(), "ragged.txt", "2\n1 2 3\n4 5\n");
    let out = detkit(&["det", "--field", "int", ragged.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    let m = write_matrix(dir.path(), "ok.txt", "2\n1 2\n3 4\n");
    let out = detkit(&[
        "det",
        "--field",
        "int",
        "--mode",
        "krylov",
        m.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("prime field"), "{}", stderr(&out));

    let out = detkit(&["det", "--field", "gf:8", m.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn division_free_mode_over_a_prime_field() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_matrix(dir.path(), "m.txt", "2\n1 2\n3 4\n");
    let out = detkit(&[
        "det",
        "--field",
        "gf:7",
        "--mode",
        "division-free",
        "--check",
        "--json",
        m.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains(r#""det":"5""#), "{}", stdout(&out));
}

#[test]
fn oracle_mode_computes_directly_and_rejects_check() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_matrix(dir.path(), "m.txt", "2\n1 2\n3 4\n");
    let out = detkit(&[
        "adjoint",
        "--field",
        "int",
        "--mode",
        "oracle",
        m.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("4 -2"), "{}", stdout(&out));
    let out = detkit(&[
        "adjoint",
        "--field",
        "int",
        "--mode",
        "oracle",
        "--check",
        m.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bench_reports_stage_counts() {
    let out = detkit(&["bench", "--sizes", "4,8", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("forward muls: step1="), "{text}");
    assert!(text.contains("reverse muls: step5="), "{text}");
    assert!(text.contains("step-2 reversal:"), "{text}");
}

#[test]
fn selftest_passes_and_prints_one_line_per_suite() {
    let out = detkit(&["selftest", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    for name in [
        "ring and module properties",
        "adjugate correctness, field mode",
        "gradient exactness",
        "division-free pipeline",
        "determinant agreement and sign",
        "degenerate handling",
        "cost shape of step-2 reversal",
        "partial evaluation safety",
        "polynomial matrix inversion",
    ] {
        assert!(text.contains(name), "missing {name}: {text}");
    }
    assert!(text.contains("all 9 checks passed"), "{text}");
}
