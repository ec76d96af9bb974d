//! Black-box tests of the `ncf` binary: exit codes, the materials file
//! path (flag and environment variable), and output well-formedness.

use std::process::{Command, Output};

fn ncf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn exit_codes() {
    // 0: success
    assert_eq!(ncf(&["materials"]).status.code(), Some(0));
    // 2: usage error from the argument parser
    assert_eq!(ncf(&["lcoeff", "--no-such-flag"]).status.code(), Some(2));
    // 2: validation error (unknown material)
    let out = ncf(&["lcoeff", "--material", "unobtainium"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown material"));
    // 2: invalid config value
    assert_eq!(ncf(&["experiment", "--voltage", "0"]).status.code(), Some(2));
    assert_eq!(ncf(&["mirror", "--points", "1.0"]).status.code(), Some(2));
}

#[test]
fn numerical_failure_exits_three() {
    // a resonance below the f64 underflow scale makes the Lorentz
    // denominator vanish at the sampling frequencies; the pole is
    // reported as a numerical failure
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("denormal.json");
    std::fs::write(
        &path,
        r#"{"name": "denormal", "terms":
            [{"omega_n": 1.0e-300, "a_n": 1.0e-280, "b_n": 0.0, "gamma_n": 1.0e-310}]}"#,
    )
    .unwrap();
    let out = ncf(&["lcoeff", "--model", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("pole"));
}

#[test]
fn help_exits_zero() {
    assert_eq!(ncf(&["--help"]).status.code(), Some(0));
    assert_eq!(ncf(&["experiment", "--help"]).status.code(), Some(0));
}

#[test]
fn materials_file_via_flag_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("custom.json");
    std::fs::write(
        &path,
        r#"[{"name": "mysample", "kind": "conductor", "sigma_dc_per_ohm_m": 6.4e5,
            "notes": "in-house measurement"},
           {"name": "graphite", "kind": "conductor", "sigma_dc_per_ohm_m": 2.0e5}]"#,
    )
    .unwrap();
    let path_str = path.to_str().unwrap();

    // --materials flag: new entry resolvable, builtin overridden with a warning
    let out = ncf(&["lcoeff", "--materials", path_str, "--material", "mysample"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = ncf(&["lcoeff", "--materials", path_str, "--material", "graphite"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("overrides the built-in"));
    // L = 2 eps0 / 2.0e5 = 8.854e-17
    assert!(stdout(&out).contains("8.85418781e-17"));

    // same through the environment variable
    let out = Command::new(env!("CARGO_BIN_EXE_ncf"))
        .args(["materials"])
        .env("NCF_MATERIALS_PATH", path_str)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("mysample"));

    // broken file is a validation error, exit 2
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"[{"name": "x", "kind": "direct_l", "sigma_dc_per_ohm_m": 1.0}]"#,
    )
    .unwrap();
    let out = ncf(&["materials", "--materials", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lcoeff_model_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("model.json");
    // single Lorentz resonance: a1 = 1e30, w1 = 1e16, gamma1 = 1e13
    std::fs::write(
        &path,
        r#"{"name": "custom", "terms":
            [{"omega_n": 1.0e16, "a_n": 1.0e30, "b_n": 0.0, "gamma_n": 1.0e13}]}"#,
    )
    .unwrap();
    let out = ncf(&["lcoeff", "--model", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let row = doc["rows"][0].as_array().unwrap();
    let closed = row[0].as_f64().unwrap();
    let numeric = row[1].as_f64().unwrap();
    let diff = row[2].as_f64().unwrap();
    // L = 2 a1 g1 / (a1 + 2 w1^2)^2, as output at 9 significant digits
    let expected = 2.0 * 1e30 * 1e13 / (1e30f64 + 2e32).powi(2);
    assert!((closed - expected).abs() / expected < 1e-8);
    assert!((numeric - closed).abs() / closed < 1e-3);
    assert!(diff < 1e-3);

    // empty model resolves to L = 0 on both routes
    let vacuous = dir.path().join("vacuumlike.json");
    std::fs::write(&vacuous, r#"{"name": "vacuumlike", "terms": []}"#).unwrap();
    let out = ncf(&["lcoeff", "--model", vacuous.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0.00000000e0,0.00000000e0"));
}

#[test]
fn trajectory_offsets_file_and_bisect() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("offsets.txt");
    let offsets: Vec<String> = (0..25).map(|i| format!("{:e}", i as f64 * 1e-9)).collect();
    std::fs::write(&path, offsets.join("\n")).unwrap();
    // wide-gap config so offset ions survive
    let base = [
        "trajectory",
        "--material",
        "V",
        "--gap",
        "1e-4",
        "--length",
        "0.01",
    ];
    let mut scan = base.to_vec();
    scan.extend(["--offsets-file", path.to_str().unwrap()]);
    let out = ncf(&scan);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let data_rows = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.contains('['))
        .count();
    assert_eq!(data_rows, 25, "one row per offset, input order");

    let mut bisect = base.to_vec();
    bisect.push("--bisect");
    let out = ncf(&bisect);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let threshold: f64 = text
        .lines()
        .find(|l| !l.starts_with('#') && !l.contains('['))
        .unwrap()
        .parse()
        .unwrap();
    assert!(threshold > 0.0 && threshold < 0.5e-4);
}

#[test]
fn csv_json_cross_parse_for_mirror() {
    let csv = ncf(&["mirror", "--grid", "0.2:0.8:4"]);
    let json = ncf(&["mirror", "--grid", "0.2:0.8:4", "--format", "json"]);
    assert!(csv.status.success() && json.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    let csv_text = stdout(&csv);
    let csv_rows: Vec<Vec<f64>> = csv_text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.contains('['))
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    let json_rows = doc["rows"].as_array().unwrap();
    assert_eq!(csv_rows.len(), json_rows.len());
    for (cr, jr) in csv_rows.iter().zip(json_rows) {
        for (c, j) in cr.iter().zip(jr.as_array().unwrap()) {
            assert_eq!(*c, j.as_f64().unwrap());
        }
    }
}
