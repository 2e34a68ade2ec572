//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// Documented invocations checked byte-for-byte against `tests/golden/<name>.out`.
pub const GOLDEN: &[(&str, &[&str])] = &[
    (
        "integral_definite_sin",
        &[
            "integral",
            "definite",
            "--kind",
            "sin",
            "--alpha",
            "0",
            "--eta",
            "1",
            "--beta",
            "1",
            "--a",
            "0",
            "--b",
            "3.14159265358979",
            "--verify",
        ],
    ),
    (
        "integral_halfline_gaussian",
        &[
            "integral", "halfline", "--alpha", "0", "--eta", "1", "--beta", "2",
        ],
    ),
    (
        "integral_eval_elementary",
        &[
            "integral", "eval", "--kind", "exp", "--alpha", "1", "--eta", "1", "--beta", "2",
            "--x", "1",
        ],
    ),
    (
        "identity_check_t2",
        &[
            "identity", "check", "--id", "T2", "--alpha", "0.5", "--beta", "2", "--eta", "1",
            "--x", "0.7",
        ],
    ),
    (
        "identity_check_l1a",
        &[
            "identity", "check", "--id", "L1a", "--alpha", "0", "--beta", "1", "--j", "3",
        ],
    ),
    (
        "identity_sweep_t7",
        &[
            "identity",
            "sweep",
            "--id",
            "T7",
            "--samples",
            "100",
            "--seed",
            "7",
        ],
    ),
    (
        "dist_cdf_gengamma",
        &[
            "dist", "cdf", "--family", "gengamma", "--alpha", "1", "--eta", "1", "--beta", "1",
            "--x", "1",
        ],
    ),
    (
        "dist_moment_invgamma",
        &[
            "dist", "moment", "--family", "invgamma", "--theta", "3", "--eta", "2", "--n", "1",
        ],
    ),
    (
        "dist_quantile_symmetric",
        &[
            "dist",
            "quantile",
            "--family",
            "symmetric",
            "--alpha",
            "0",
            "--eta",
            "0.5",
            "--beta",
            "2",
            "--p",
            "0.5",
        ],
    ),
    (
        "dist_sample_gengamma",
        &[
            "dist", "sample", "--family", "gengamma", "--alpha", "1", "--eta", "1", "--beta", "1",
            "--n", "5", "--seed", "42",
        ],
    ),
    (
        "dist_curve_locscale",
        &[
            "dist", "curve", "--family", "locscale", "--alpha", "0", "--eta", "0.5", "--beta", "2",
            "--theta", "1", "--sigma", "2", "--from", "-3", "--to", "5", "--points", "9",
        ],
    ),
];

/// Output modes each golden invocation is recorded in.
pub const MODES: &[(&str, &[&str])] = &[("txt", &[]), ("json", &["--json"]), ("csv", &["--csv"])];

/// `(description, env, args, expected exit code)`.
pub type ExitCase = (
    &'static str,
    Option<(&'static str, &'static str)>,
    &'static [&'static str],
    i32,
);

pub const EXIT_CODES: &[ExitCase] = &[
    (
        "success",
        None,
        &[
            "integral", "halfline", "--alpha", "0", "--eta", "1", "--beta", "2",
        ],
        0,
    ),
    ("unknown subcommand", None, &["integral", "frobnicate"], 2),
    (
        "missing flag",
        None,
        &[
            "integral", "eval", "--kind", "exp", "--alpha", "1", "--eta", "1", "--beta", "2",
        ],
        2,
    ),
    (
        "malformed number",
        None,
        &[
            "integral", "halfline", "--alpha", "zero", "--eta", "1", "--beta", "2",
        ],
        2,
    ),
    (
        "missing identity parameter",
        None,
        &[
            "identity", "check", "--id", "T3", "--alpha", "0.5", "--beta", "2", "--x", "1",
        ],
        2,
    ),
    (
        "bad HYPERINT_MAX_TERMS",
        Some(("HYPERINT_MAX_TERMS", "many")),
        &[
            "integral", "halfline", "--alpha", "0", "--eta", "1", "--beta", "2",
        ],
        2,
    ),
    (
        "non-positive eta",
        None,
        &[
            "integral", "halfline", "--alpha", "0", "--eta", "-1", "--beta", "2",
        ],
        3,
    ),
    (
        "divergent half-line",
        None,
        &[
            "integral", "halfline", "--alpha", "-2", "--eta", "1", "--beta", "2",
        ],
        3,
    ),
    (
        "pole parameter",
        None,
        &[
            "integral", "eval", "--kind", "sin", "--alpha", "-1", "--eta", "1", "--beta", "1",
            "--x", "1",
        ],
        3,
    ),
    (
        "invalid family parameters",
        None,
        &[
            "dist",
            "pdf",
            "--family",
            "symmetric",
            "--alpha",
            "-1.5",
            "--eta",
            "1",
            "--beta",
            "2",
            "--x",
            "0",
        ],
        3,
    ),
    (
        "nonexistent moment",
        None,
        &[
            "dist", "moment", "--family", "invgamma", "--theta", "3", "--eta", "2", "--n", "3",
        ],
        3,
    ),
    (
        "verify tolerance",
        None,
        &[
            "integral", "definite", "--kind", "cos", "--alpha", "0.5", "--eta", "1", "--beta", "2",
            "--a", "0.1", "--b", "2", "--verify", "--tol", "0",
        ],
        4,
    ),
    (
        "identity tolerance",
        None,
        &[
            "identity",
            "sweep",
            "--id",
            "T5",
            "--samples",
            "20",
            "--seed",
            "3",
            "--tol",
            "0",
        ],
        4,
    ),
    (
        "series budget",
        Some(("HYPERINT_MAX_TERMS", "3")),
        &[
            "integral", "eval", "--kind", "cos", "--alpha", "0.5", "--eta", "1", "--beta", "2",
            "--x", "1.5",
        ],
        5,
    ),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

pub fn hyperint(env: Option<(&str, &str)>, args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hyperint"));
    cmd.env_remove("HYPERINT_MAX_TERMS").args(args);
    if let Some((k, v)) = env {
        cmd.env(k, v);
    }
    cmd.output().expect("spawn hyperint")
}

/// Compares every golden invocation in every mode. With `HYPERINT_BLESS=1`
/// the files are rewritten instead. Returns the mismatches.
pub fn check_golden() -> Vec<String> {
    let bless = std::env::var_os("HYPERINT_BLESS").is_some();
    let mut failures = Vec::new();
    for (name, args) in GOLDEN {
        for (ext, flags) in MODES {
            let argv: Vec<&str> = flags.iter().chain(args.iter()).copied().collect();
            let out = hyperint(None, &argv);
            let path = golden_dir().join(format!("{name}.{ext}"));
            if out.status.code() != Some(0) {
                failures.push(format!("{name}.{ext}: exit {:?}", out.status.code()));
                continue;
            }
            let second = hyperint(None, &argv);
            if second.stdout != out.stdout {
                failures.push(format!("{name}.{ext}: output differs between runs"));
            }
            if bless {
                std::fs::write(&path, &out.stdout).expect("write golden");
                continue;
            }
            match std::fs::read(&path) {
                Ok(expected) if expected == out.stdout => {}
                Ok(_) => failures.push(format!("{name}.{ext}: differs from {}", path.display())),
                Err(e) => failures.push(format!("{name}.{ext}: {e}")),
            }
        }
    }
    failures
}

/// Returns the exit-code cases that did not produce the expected code.
pub fn check_exit_codes() -> Vec<String> {
    EXIT_CODES
        .iter()
        .filter_map(|(what, env, args, code)| {
            let out = hyperint(*env, args);
            let stderr_ok = *code == 0 || !out.stderr.is_empty();
            (out.status.code() != Some(*code) || !stderr_ok)
                .then(|| format!("{what}: expected {code}, got {:?}", out.status.code()))
        })
        .collect()
}

/// Relative difference with an absolute floor on the denominator.
pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}
