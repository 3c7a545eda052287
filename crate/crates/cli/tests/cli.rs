//! End-to-end tests of the `horofano` binary: exit codes, output shapes and
//! byte-stable golden files. Regenerate the goldens with
//! `REGEN_FIXTURES=1 cargo test -p horofano-cli`.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use horofano_cli::record::OutputRecord;

fn horofano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horofano"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stderr).expect("utf-8 stderr")
}

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn assert_matches_golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var("REGEN_FIXTURES").is_ok() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("golden {} unreadable: {e}", path.display()));
    assert_eq!(actual, expected, "output drifted from {}", path.display());
}

#[test]
fn invariants_x2_reports_table_row() {
    let out = horofano(&["invariants", "X2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    for line in [
        "c1(X)       7",
        "c1(Y)       5",
        "c1(Z)       6",
        "codim Y     4",
        "codim Z     3",
        "dim X       9",
        "checks      pass",
    ] {
        assert!(text.contains(line), "missing `{line}` in:\n{text}");
    }
}

#[test]
fn invariants_x3_4_2_computes_dimensions_from_roots() {
    let out = horofano(&["invariants", "X3(4,2)", "--format", "json"]);
    assert!(out.status.success());
    let record: OutputRecord = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    let inv = record.invariants.expect("invariants present");
    assert_eq!(
        (inv.c1_x, inv.c1_y, inv.c1_z, inv.codim_y, inv.codim_z),
        (8, 7, 8, 2, 6)
    );
    assert_eq!(inv.dim_x, inv.dim_y + inv.codim_y);
    assert_eq!(inv.dim_x, inv.dim_z + inv.codim_z);
    assert_eq!(record.checks.as_deref(), Some("pass"));
}

#[test]
fn invariants_rejects_out_of_domain_parameter() {
    let out = horofano(&["invariants", "X1(2)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("n >= 3"), "{}", stderr_of(&out));
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn classify_reports_exact_ch2_pair() {
    let out = horofano(&["classify", "X3(9,7)", "--format", "json"]);
    assert!(out.status.success());
    let record: OutputRecord = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(record.two_fano, Some(true));
    assert_eq!(record.ch2_sy.as_deref(), Some("1/2"));
    assert_eq!(record.ch2_sz.as_deref(), Some("1/2"));
    assert_eq!(record.tangent_stable, Some(true));
    assert_eq!(record.k_polystable, Some(false));
}

#[test]
fn classify_weighted_ci() {
    let out = horofano(&["classify", "WCI(1,1,1,1,1,1; 2)", "--format", "json"]);
    assert!(out.status.success());
    let record: OutputRecord = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(record.two_fano, Some(true));
    assert_eq!(record.kind, "weighted-ci");
}

#[test]
fn classify_homogeneous_g2() {
    let out = horofano(&["classify", "G2/P1", "--format", "json"]);
    assert!(out.status.success());
    let record: OutputRecord = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(record.two_fano, Some(true));
    assert_eq!(record.kind, "homogeneous");
}

#[test]
fn classify_rejects_unknown_descriptor() {
    let out = horofano(&["classify", "Q7/P1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("Q7/P1"), "{}", stderr_of(&out));
}

#[test]
fn enumerate_horospherical_csv_matches_golden() {
    let out = horofano(&[
        "enumerate",
        "--horospherical",
        "--max-n",
        "9",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_matches_golden("horospherical-n9.csv", text);
    // Exactly the four known families classify as 2-Fano.
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let two_fano_col = reader
        .headers()
        .unwrap()
        .iter()
        .position(|h| h == "two_fano")
        .unwrap();
    let hits: Vec<String> = reader
        .records()
        .map(|r| r.unwrap())
        .filter(|r| &r[two_fano_col] == "true")
        .map(|r| r[0].to_string())
        .collect();
    assert_eq!(hits, ["X2", "X3(3,3)", "X3(6,5)", "X3(9,7)"]);
}

#[test]
fn enumerate_homogeneous_csv_matches_golden() {
    let out = horofano(&[
        "enumerate",
        "--homogeneous",
        "--max-rank",
        "8",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert_matches_golden("homogeneous-rank8.csv", stdout_of(&out));
}

#[test]
fn enumerate_series_filter_b() {
    let out = horofano(&[
        "enumerate",
        "--homogeneous",
        "--series",
        "B",
        "--max-rank",
        "8",
        "--format",
        "jsonl",
    ]);
    assert!(out.status.success());
    let records: Vec<OutputRecord> = stdout_of(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(records.iter().all(|r| r.descriptor.starts_with('B')));
    let hits: Vec<&str> = records
        .iter()
        .filter(|r| r.two_fano == Some(true))
        .map(|r| r.descriptor.as_str())
        .collect();
    // k = 1 and k = n always; the 2n = 3k+1 interior hits are B5/P3, B8/P5.
    let expected = [
        "B2/P1", "B2/P2", "B3/P1", "B3/P3", "B4/P1", "B4/P4", "B5/P1", "B5/P3", "B5/P5", "B6/P1",
        "B6/P6", "B7/P1", "B7/P7", "B8/P1", "B8/P5", "B8/P8",
    ];
    assert_eq!(hits, expected);
}

#[test]
fn enumerate_jsonl_round_trips() {
    let out = horofano(&[
        "enumerate",
        "--horospherical",
        "--max-n",
        "6",
        "--format",
        "jsonl",
    ]);
    assert!(out.status.success());
    for line in stdout_of(&out).lines() {
        let record: OutputRecord = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&record).unwrap(), line);
    }
}

#[test]
fn table_and_jsonl_formats_match_goldens() {
    let out = horofano(&[
        "enumerate",
        "--horospherical",
        "--max-n",
        "6",
        "--format",
        "table",
    ]);
    assert!(out.status.success());
    assert_matches_golden("horospherical-n6.txt", stdout_of(&out));

    let out = horofano(&[
        "enumerate",
        "--horospherical",
        "--max-n",
        "6",
        "--format",
        "jsonl",
    ]);
    assert!(out.status.success());
    assert_matches_golden("horospherical-n6.jsonl", stdout_of(&out));
}

#[test]
fn enumerate_empty_bounds_is_empty_success() {
    let out = horofano(&["enumerate", "--horospherical", "--max-n", "0"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn enumerate_rejects_cap_excess() {
    let out = horofano(&["enumerate", "--horospherical", "--max-n", "100"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr_of(&out).contains("exceeds the configured maximum"),
        "{}",
        stderr_of(&out)
    );
}

#[test]
fn environment_variable_sets_the_cap() {
    // Lowering the cap turns an otherwise-valid sweep into a usage error.
    let out = Command::new(env!("CARGO_BIN_EXE_horofano"))
        .args(["enumerate", "--horospherical", "--max-n", "12"])
        .env("HOROFANO_MAX_RANK", "10")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr_of(&out).contains("exceeds the configured maximum"),
        "{}",
        stderr_of(&out)
    );
    // Raising it admits ranks beyond the default 64.
    let out = Command::new(env!("CARGO_BIN_EXE_horofano"))
        .args(["invariants", "X1(70)"])
        .env("HOROFANO_MAX_RANK", "80")
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "{}", stderr_of(&out));
    assert!(stdout_of(&out).contains("checks      pass"));
}

#[test]
fn bare_enumerate_sweeps_both_blocks() {
    let out = horofano(&["enumerate", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("A1/P1,homogeneous"));
    assert!(text.contains("X2,horospherical"));
}

#[test]
fn enumerate_output_is_deterministic() {
    let run = || {
        let out = horofano(&[
            "enumerate",
            "--horospherical",
            "--homogeneous",
            "--max-n",
            "7",
            "--max-rank",
            "5",
            "--format",
            "table",
        ]);
        assert!(out.status.success());
        stdout_of(&out).to_string()
    };
    assert_eq!(run(), run());
}

#[test]
fn golden_flag_writes_byte_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = horofano(&[
        "enumerate",
        "--horospherical",
        "--homogeneous",
        "--max-n",
        "9",
        "--max-rank",
        "8",
        "--format",
        "csv",
        "--golden",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty(), "golden mode writes files only");
    let horo = std::fs::read_to_string(dir.path().join("horospherical-n9.csv")).unwrap();
    let homog = std::fs::read_to_string(dir.path().join("homogeneous-rank8.csv")).unwrap();
    assert_eq!(
        horo,
        std::fs::read_to_string(golden_path("horospherical-n9.csv")).unwrap()
    );
    assert_eq!(
        homog,
        std::fs::read_to_string(golden_path("homogeneous-rank8.csv")).unwrap()
    );
}
