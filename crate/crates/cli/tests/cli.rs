use std::fs;

use gallai::harness::CSV_HEADER;
use gallai_cli::{run, EXIT_CAPACITY, EXIT_IO, EXIT_OK, EXIT_USAGE};

fn gallai(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let argv = std::iter::once("gallai").chain(args.iter().copied());
    let code = run(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn field<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no {key} in {report}"))
}

#[test]
fn gen_is_deterministic_and_canonical() {
    let (code, a) = gallai(&["gen", "--n", "100", "--p", "0.05", "--seed", "42"]);
    assert_eq!(code, EXIT_OK);
    let (_, b) = gallai(&["gen", "--n", "100", "--p", "0.05", "--seed", "42"]);
    assert_eq!(a, b);
    let (_, k5) = gallai(&["gen", "--n", "5", "--p", "1", "--seed", "7"]);
    assert!(k5.starts_with("5 10\n0 1\n0 2\n"));
    let (_, empty) = gallai(&["gen", "--n", "5", "--p", "0", "--seed", "7"]);
    assert_eq!(empty, "5 0\n");
}

#[test]
fn file_round_trip_through_stats_count_and_estimate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.txt");
    let path = path.to_str().unwrap();
    assert_eq!(gallai(&["gen", "--n", "4", "--p", "1", "--seed", "0", "--out", path]).0, EXIT_OK);
    assert_eq!(fs::read_to_string(path).unwrap(), "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");

    let (code, stats) = gallai(&["stats", "--in", path]);
    assert_eq!(code, EXIT_OK);
    assert_eq!((field(&stats, "e"), field(&stats, "T"), field(&stats, "t")), ("6", "4", "6"));

    let (code, count) = gallai(&["count", "--in", path]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&count, "count"), "279");
    assert_eq!(field(&count, "construction_count"), "64");
    assert_eq!(field(&count, "gap_over_construction"), "215");

    let (code, est) = gallai(&["estimate", "--in", path, "--method", "knuth", "--samples", "20000", "--seed", "1"]);
    assert_eq!(code, EXIT_OK);
    let log3: f64 = field(&est, "log3_estimate").parse().unwrap();
    let se: f64 = field(&est, "log3_stderr").parse().unwrap();
    assert!((log3 - 279f64.log(3.0)).abs() < 4.0 * se);
}

#[test]
fn naive_zero_hit_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k10.txt");
    let path = path.to_str().unwrap();
    gallai(&["gen", "--n", "10", "--p", "1", "--seed", "0", "--out", path]);
    let (code, est) = gallai(&["estimate", "--in", path, "--method", "naive", "--samples", "100"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&est, "zero_hit"), "true");
}

#[test]
fn exit_codes() {
    assert_eq!(gallai(&[]).0, EXIT_USAGE);
    assert_eq!(gallai(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(gallai(&["gen", "--n", "3"]).0, EXIT_USAGE);
    assert_eq!(gallai(&["gen", "--n", "3", "--p", "1.5", "--seed", "0"]).0, EXIT_USAGE);
    assert_eq!(gallai(&["--help"]).0, EXIT_OK);
    assert_eq!(gallai(&["count", "--in", "/definitely/not/here"]).0, EXIT_IO);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("loop.txt");
    fs::write(&bad, "3 1\n1 1\n").unwrap();
    assert_eq!(gallai(&["stats", "--in", bad.to_str().unwrap()]).0, EXIT_USAGE);

    let k9 = dir.path().join("k9.txt");
    gallai(&["gen", "--n", "9", "--p", "1", "--seed", "0", "--out", k9.to_str().unwrap()]);
    let (code, out) = gallai(&["count", "--in", k9.to_str().unwrap(), "--node-cap", "1000"]);
    assert_eq!(code, EXIT_CAPACITY);
    assert_eq!(field(&out, "capped"), "true");
}

#[test]
fn sweep_writes_csv_and_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.cfg");
    fs::write(&cfg, "n_values = 0, 4, 20\nc_values = 0.5, 2.0\nseeds = 0..3\nsamples = 500\n").unwrap();
    let out = dir.path().join("sweep.csv");
    let (code, _) = gallai(&["sweep", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let csv = fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    assert_eq!(lines.count(), 18);
    assert!(csv.lines().skip(1).all(|l| l.split(',').count() == 15));
    // n = 4, c = 2.0 is K4.
    let k4 = csv.lines().find(|l| l.starts_with("4,2,1,")).unwrap();
    assert!(k4.contains(",6,4,6,exact,"), "{k4}");
    let meta = fs::read_to_string(dir.path().join("sweep.csv.meta")).unwrap();
    assert!(meta.contains("chacha8"));

    let (code, stdout_csv) = gallai(&["sweep", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(stdout_csv, csv);
}

#[test]
fn sweep_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    fs::write(&cfg, "n_values = 4\nc_values = 1\nseeds = 0\nflavour = mint\n").unwrap();
    assert_eq!(gallai(&["sweep", "--config", cfg.to_str().unwrap()]).0, EXIT_USAGE);
    fs::write(&cfg, "n_values = 4\nc_values = 3\nseeds = 0\n").unwrap();
    assert_eq!(gallai(&["sweep", "--config", cfg.to_str().unwrap()]).0, EXIT_USAGE);

    fs::write(&cfg, "n_values = 4\nc_values = 1\nseeds = 0\n").unwrap();
    let unwritable = dir.path().join("missing-dir").join("out.csv");
    let code = gallai(&["sweep", "--config", cfg.to_str().unwrap(), "--out", unwritable.to_str().unwrap()]).0;
    assert_eq!(code, EXIT_IO);
}

#[test]
fn verify_passes() {
    let (code, out) = gallai(&["verify"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
}
