use std::process::Command;

use hopfseq::cli::run;

fn hopfseq(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfseq")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn table_a6_matches_reference() {
    let (code, out, err) = hopfseq(&["table", "a6"]);
    assert_eq!(code, 0, "{err}");
    assert!(err.contains("match (22 classes)"));
    assert_eq!(out.lines().count(), 2 + 22);
}

#[test]
fn table_csv_is_parseable() {
    let (code, out, _) = hopfseq(&["--format", "csv", "table", "a5"]);
    assert_eq!(code, 0);
    let mut r = csv::Reader::from_reader(out.as_bytes());
    let rows: Vec<csv::StringRecord> = r.records().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), 9);
    let orders: usize = rows.iter().map(|r| r[2].parse::<usize>().unwrap()).sum();
    assert_eq!(orders, 1 + 2 + 3 + 4 + 5 + 6 + 10 + 12 + 60);
}

#[test]
fn exit_codes() {
    assert_eq!(hopfseq(&["table", "nonsense"]).0, 2);
    assert_eq!(hopfseq(&["frobnicate"]).0, 2);
    assert_eq!(hopfseq(&["--cap-order", "100", "table", "a6"]).0, 3);
    assert_eq!(hopfseq(&["certify", "vecS3"]).0, 1);
    assert_eq!(hopfseq(&["--help"]).0, 0);
}

#[test]
fn certify_and_reload() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a6.cert");
    let p = path.to_str().unwrap();
    let (code, out, _) = hopfseq(&["certify", "a6-simple", "--out", p]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: SIMPLE"));
    let (code, again, _) = hopfseq(&["certify", "--load", p]);
    assert_eq!(code, 0);
    assert_eq!(again, out);
}

#[test]
fn build_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.hopf");
    let p = path.to_str().unwrap();
    assert_eq!(hopfseq(&["build", "D:S3", "--out", p]).0, 0);
    let (code, out, _) = hopfseq(&["verify", p, "--samples", "300", "--seed", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("dimension: 36"));
    assert!(out.contains("hopf axioms: PASS"));

    let mp = dir.path().join("s3.mp");
    let m = mp.to_str().unwrap();
    assert_eq!(hopfseq(&["build", "mp:S3:Z2:Z3", "--out", m]).0, 0);
    let (code, out, _) = hopfseq(&["verify", m]);
    assert_eq!(code, 0);
    assert!(out.contains("matched pair: PASS"));
}

#[test]
fn corrupt_file_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.hopf");
    std::fs::write(&path, "not a hopf algebra\n").unwrap();
    let (code, _, err) = hopfseq(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn sequence_report() {
    let (code, out, _) = hopfseq(&["verify", "D:S3", "--sequence"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("verdict: EXACT").count(), 2);
}

#[test]
fn conductor_flag_rebuilds_bicrossed_products() {
    let a = run(["hopfseq", "build", "D:S3"]);
    let b = run(["hopfseq", "--conductor", "3", "build", "D:S3"]);
    assert_eq!(a.code, 0);
    assert_eq!(b.code, 0);
    assert_ne!(a.stdout, b.stdout);
    let v = run(["hopfseq", "--conductor", "3", "verify", "D:S3", "--samples", "100"]);
    assert_eq!(v.code, 0, "{}", v.stdout);
}

#[test]
fn compseries_reports_jordan_holder_failure() {
    let out = run(["hopfseq", "compseries", "vecS6", "--chain", "a6", "--chain", "iterated"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("a6 (length 2) vs iterated (length 7): factor multisets differ"));
    let out = run(["hopfseq", "compseries", "center(vecS6)", "--chain", "a6", "--chain", "iterated"]);
    assert!(out.stdout.contains("(length 4)") && out.stdout.contains("(length 9)"), "{}", out.stdout);
}

#[test]
fn compseries_on_hopf_algebra() {
    let out = run(["hopfseq", "compseries", "D:S3", "--chain", "first-maximal", "--chain", "smallest-normal", "--explore"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("factors: {k^Z2, k^Z3, kZ3, kZ2}"));
    assert!(out.stdout.contains("factor multisets agree"));
    assert!(out.stdout.contains("jordan-holder: holds"));
}

#[test]
fn ledger_checks_type_constants() {
    let out = run(["hopfseq", "--format", "text", "ledger"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.matches("true").count(), 6);
    let out = run(["hopfseq", "ledger", "cpq:3:5"]);
    assert!(out.stdout.contains("| FPdim | 75 |"), "{}", out.stdout);
}

#[test]
fn factorize_lists_verified_pairs() {
    let out = run(["hopfseq", "--format", "csv", "factorize", "a5"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.lines().skip(1).all(|l| l.ends_with(",yes")));
    let out = run(["hopfseq", "factorize", "a6"]);
    assert!(out.stderr.contains("0 exact factorizations"));
}
