#![allow(dead_code)]

use std::path::PathBuf;

pub const CASES: &[(&str, &[&str])] = &[
    (
        "value_k10_n4_det",
        &["value", "--k", "10", "--n", "4", "--method", "det"],
    ),
    (
        "bernoulli_k6_det",
        &["bernoulli", "--k", "6", "--method", "det"],
    ),
    (
        "poly_k5_odd_N",
        &["poly", "--k", "5", "--parity", "odd", "--basis", "N"],
    ),
];

pub const FORMATS: &[(&str, &str)] = &[
    ("plain", "txt"),
    ("json", "json"),
    ("csv", "csv"),
    ("latex", "tex"),
];

pub fn golden_path(stem: &str, ext: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{stem}.{ext}"))
}

pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("faulhaber").chain(args.iter().copied());
    let code = faulhaber::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

/// Every case in every format, paired with its golden file contents.
pub fn golden_runs() -> Vec<(String, String, String)> {
    let mut runs = Vec::new();
    for (stem, args) in CASES {
        for (format, ext) in FORMATS {
            let mut full = vec!["--format", format];
            full.extend_from_slice(args);
            let (code, out, _) = run_cli(&full);
            assert_eq!(code, 0, "{stem} --format {format}");
            let expected = std::fs::read_to_string(golden_path(stem, ext)).unwrap();
            runs.push((format!("{stem}.{ext}"), out, expected));
        }
    }
    runs
}
