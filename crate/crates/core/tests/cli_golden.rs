mod common;

use std::collections::BTreeSet;

#[test]
fn golden_outputs_are_byte_identical() {
    let failures = common::check_golden();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn exit_codes_follow_the_mapping() {
    let failures = common::check_exit_codes();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn json_lines_parse_with_a_stable_key_set() {
    let out = common::hyperint(
        None,
        &[
            "--json",
            "identity",
            "sweep",
            "--id",
            "L1b",
            "--samples",
            "25",
            "--seed",
            "4",
            "--each",
        ],
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let keys: BTreeSet<Vec<String>> = text
        .lines()
        .map(|line| {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            v.as_object().unwrap().keys().cloned().collect()
        })
        .collect();
    assert_eq!(keys.len(), 1);
    assert_eq!(text.lines().count(), 25);
}

#[test]
fn csv_round_trips_through_a_reader() {
    let out = common::hyperint(
        None,
        &[
            "--csv", "dist", "curve", "--family", "gengamma", "--alpha", "1", "--eta", "1",
            "--beta", "1", "--from", "0", "--to", "4", "--points", "17",
        ],
    );
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(reader.headers().unwrap(), vec!["family", "x", "pdf", "cdf"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 17);
    for row in &rows {
        let x: f64 = row[1].parse().unwrap();
        let cdf: f64 = row[3].parse().unwrap();
        let expected = 1.0 - (1.0 + x) * (-x).exp();
        assert!((cdf - expected).abs() < 1e-14, "{x}: {cdf} vs {expected}");
    }
}

#[test]
fn json_numbers_round_trip() {
    let out = common::hyperint(
        None,
        &[
            "--json", "integral", "halfline", "--alpha", "0", "--eta", "1", "--beta", "2",
        ],
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let value = v["value"].as_f64().unwrap();
    assert_eq!(
        value,
        hyperint::integrals::half_line_integral(0.0, 1.0, 2.0).unwrap()
    );
    assert!(v["oracle_value"].is_null());
}

#[test]
fn negative_values_are_accepted_as_arguments() {
    let out = common::hyperint(
        None,
        &[
            "dist", "cdf", "--family", "locscale", "--alpha", "0", "--eta", "0.5", "--beta", "2",
            "--theta", "-1", "--sigma", "2", "--x", "-1",
        ],
    );
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("value=0.5"));
}

#[test]
fn timing_is_opt_in() {
    let args = [
        "integral", "halfline", "--alpha", "0", "--eta", "1", "--beta", "2",
    ];
    let plain = String::from_utf8(common::hyperint(None, &args).stdout).unwrap();
    assert!(!plain.contains("elapsed_us"));
    let mut timed = vec!["--timing"];
    timed.extend(args);
    let timed = String::from_utf8(common::hyperint(None, &timed).stdout).unwrap();
    assert!(timed.contains("elapsed_us="));
}

#[test]
fn help_exits_zero() {
    for args in [&["--help"][..], &["dist", "--help"], &["--version"]] {
        let out = common::hyperint(None, args);
        assert_eq!(out.status.code(), Some(0));
        assert!(!out.stdout.is_empty());
    }
}
