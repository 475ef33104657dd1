use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("framekit").chain(args.iter().copied());
    let code = framekit_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "stdout: {out}\nstderr: {err}");
    serde_json::from_str(&out).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn mercedes_benz(dir: &TempDir, scale: f64) -> PathBuf {
    let h = 3f64.sqrt() / 2.0 * scale;
    let body = format!(
        r#"{{"rows":3,"cols":2,"data":[[0,0],[{one},0],[{m},0],[{mh},0],[{h},0],[{mh},0]]}}"#,
        one = scale,
        m = -h,
        mh = -0.5 * scale,
    );
    write(dir, "mb.json", &body)
}

fn f(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

#[test]
fn bounds_of_mercedes_benz() {
    let dir = TempDir::new().unwrap();
    let mb = mercedes_benz(&dir, 1.0);
    let r = run_json(&["frame-bounds", "--input", s(&mb)]);
    assert!((f(&r["lower"]) - 1.5).abs() < 1e-12);
    assert!((f(&r["upper"]) - 1.5).abs() < 1e-12);
    assert_eq!(r["tight"], Value::Bool(true));
    assert_eq!(r["is_frame"], Value::Bool(true));
}

#[test]
fn bounds_of_collinear_pair() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "nonspanning.csv", "1,1i\n2,2i\n");
    let r = run_json(&["frame-bounds", "--input", s(&p)]);
    assert_eq!(f(&r["lower"]), 0.0);
    assert_eq!(r["is_frame"], Value::Bool(false));
    assert!(r["condition"].is_null());
}

#[test]
fn dual_round_trip_reconstructs_signals() {
    let dir = TempDir::new().unwrap();
    let frame = write(&dir, "f.csv", "1,0,0.5i\n0,1,0\n1-1i,0.25,1\n0,2,-1\n0.3,0.3,0.3+0.1i\n");
    let param = write(&dir, "m.csv", "1,0,0,2i,0\n0,1,-1,0,0\n0.5,0,0,0,1\n");
    let signal = write(&dir, "x.csv", "0.7-0.2i\n-1.5\n2+3i\n");
    for extra in [vec![], vec!["--param", s(&param)]] {
        let dual = dir.path().join("dual.json");
        let mut args = vec!["frame-dual", "--input", s(&frame), "--output", s(&dual)];
        args.extend(extra);
        let (code, out, _) = run(&args);
        assert_eq!(code, 0, "{out}");
        assert!(out.is_empty());
        let r = run_json(&["frame-analyze", "--input", s(&frame), "--signal", s(&signal), "--dual", s(&dual)]);
        assert!(f(&r["max_error"]) < 1e-9, "{r}");
    }
}

#[test]
fn dual_csv_output_parses_back() {
    let dir = TempDir::new().unwrap();
    let mb = mercedes_benz(&dir, 1.0);
    let (code, csv, _) = run(&["frame-dual", "--input", s(&mb), "--format", "csv"]);
    assert_eq!(code, 0);
    let p = write(&dir, "dual.csv", &csv);
    // canonical dual of a tight frame with bound 3/2 has bound 2/3
    let r = run_json(&["frame-bounds", "--input", s(&p)]);
    assert!((f(&r["lower"]) - 2.0 / 3.0).abs() < 1e-12);
}

#[test]
fn analyze_with_canonical_dual() {
    let dir = TempDir::new().unwrap();
    let mb = mercedes_benz(&dir, 1.0);
    let x = write(&dir, "x.json", r#"{"rows":1,"cols":2,"data":[[0,0],[1,0]]}"#);
    let r = run_json(&["frame-analyze", "--input", s(&mb), "--signal", s(&x)]);
    let c: Vec<f64> = r["coefficients"].as_array().unwrap().iter().map(|p| f(&p[0])).collect();
    assert!((c[0] - 1.0).abs() < 1e-15 && (c[1] + 0.5).abs() < 1e-15 && (c[2] + 0.5).abs() < 1e-15);
    assert!(f(&r["max_error"]) < 1e-12);
}

#[test]
fn tighten_naimark_and_exactness() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "ex.csv", "1,0\n0,1\n1,-1\n");
    let tight = dir.path().join("tight.json");
    let (code, _, _) = run(&["frame-tighten", "--input", s(&p), "--output", s(&tight)]);
    assert_eq!(code, 0);
    let r = run_json(&["frame-naimark", "--input", s(&tight)]);
    assert_eq!(r["unitary"]["rows"], 3);
    assert!(f(&r["unitarity_error"]) < 1e-10);
    assert!(f(&r["projection_error"]) < 1e-10);

    let r = run_json(&["frame-exactness", "--input", s(&p)]);
    assert_eq!(r["classification"], "inexact");
    for d in r["diagonal"].as_array().unwrap() {
        assert!((f(&d[0]) - 2.0 / 3.0).abs() < 1e-12);
    }
    let basis = write(&dir, "b.csv", "1,0\n1,1\n");
    assert_eq!(run_json(&["frame-exactness", "--input", s(&basis)])["classification"], "exact");

    // bound 3/2 is not a Naimark frame
    let mb = mercedes_benz(&dir, 1.0);
    let (code, out, _) = run(&["frame-naimark", "--input", s(&mb)]);
    assert_eq!(code, 1);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["error"], "not_tight_unit");
}

#[test]
fn gabor_verbs() {
    let dir = TempDir::new().unwrap();
    let r = run_json(&["gabor-check", "--proto", "gaussian", "--n", "6", "--shift", "1", "--mods", "6"]);
    assert_eq!(r["tight"], Value::Bool(true));
    assert!((f(&r["lower"]) - f(&r["full_density_bound"])).abs() < 1e-9 * f(&r["lower"]));
    assert_eq!(r["wh_structure"], Value::Bool(true));
    assert!(f(&r["commutation_error"]) < 1e-10);

    let g = write(&dir, "g.csv", "0.7071067811865476\n0.7071067811865476\n0\n0\n");
    let r = run_json(&["gabor-check", "--proto", s(&g), "--shift", "2", "--mods", "4"]);
    assert!((f(&r["lower"]) - 2.0).abs() < 1e-12 && (f(&r["upper"]) - 2.0).abs() < 1e-12);

    let r = run_json(&["gabor-check", "--proto", "delta", "--n", "4", "--shift", "2", "--mods", "4"]);
    assert_eq!(r["is_frame"], Value::Bool(false));
    assert!(r["wh_structure"].is_null());
    let (code, out, _) = run(&["gabor-dual", "--proto", "delta", "--n", "4", "--shift", "2", "--mods", "4"]);
    assert_eq!(code, 1);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["error"], "not_a_frame");

    let r = run_json(&["gabor-check", "--proto", "boxcar", "--n", "8", "--shift", "4", "--mods", "1"]);
    assert_eq!(r["undersized"], Value::Bool(true));
    assert_eq!(f(&r["lower"]), 0.0);

    let r = run_json(&["gabor-dual", "--proto", "gaussian", "--n", "8", "--shift", "2", "--mods", "8"]);
    assert_eq!(r["wh_structure"], Value::Bool(true));

    // built systems feed straight into the frame verbs
    let built = dir.path().join("gabor.json");
    let (code, _, _) = run(&["gabor-build", "--proto", s(&g), "--shift", "1", "--mods", "4", "--output", s(&built)]);
    assert_eq!(code, 0);
    let r = run_json(&["frame-bounds", "--input", s(&built)]);
    assert_eq!(r["frame_size"], 16);
    assert!((f(&r["lower"]) - 4.0).abs() < 1e-12 && r["tight"] == Value::Bool(true));
}

#[test]
fn sweep_csv_has_analytic_values() {
    let (code, out, _) = run(&[
        "sample-sweep", "--n", "64", "--band", "4", "--periods", "1,2,4", "--sigma2", "1", "--trials", "10000", "--seed", "7",
    ]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "oversampling_factor,analytic_mse,mc_mse,stderr");
    let want = [9.0 / 64.0, 9.0 / 32.0, 9.0 / 16.0];
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 3);
    for (row, w) in rows.iter().zip(want) {
        assert!((row[1] - w).abs() < 1e-12, "{row:?}");
        assert!((row[2] - w).abs() < 0.03 * w);
        assert!(row[3] > 0.0);
    }
    assert!((rows[0][0] - 64.0 / 9.0).abs() < 1e-12);
}

#[test]
fn sweep_json_and_zero_trials() {
    let r = run_json(&["sample-sweep", "--periods", "2,4", "--trials", "0", "--format", "json"]);
    let rows = r["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows[0]["mc_mse"].is_null());
    assert_eq!(r["config"]["periods"], serde_json::json!([2, 4]));
}

#[test]
fn mse_from_config_file() {
    let dir = TempDir::new().unwrap();
    write(&dir, "filt.json", r#"{"dontcare":[{"bin":5,"re":2},{"bin":-5,"re":1,"im":-1}]}"#);
    let cfg = write(
        &dir,
        "cfg.json",
        r#"{"n":64,"band":4,"period":2,"sigma2":2.0,"trials":2000,"seed":3,"filter":"filt.json"}"#,
    );
    let r = run_json(&["sample-mse", "--input", s(&cfg)]);
    let a = f(&r["analytic_mse"]);
    // passband 9 bins at gain 2, two extra bins with |H|² = 4 and 2
    let want = 2.0 / 128.0 * (9.0 * 4.0 + 4.0 + 2.0);
    assert!((a - want).abs() < 1e-12);
    assert!((f(&r["closed_form_mse"]) - want).abs() < 1e-12);
    assert!((f(&r["decomposition"]["total"]) - want).abs() < 1e-12);
    assert!((f(&r["mc_mse"]) - want).abs() < 5.0 * f(&r["stderr"]));
    assert_eq!(r["config"]["seed"], 3);

    // flags override the file
    let r = run_json(&["sample-mse", "--input", s(&cfg), "--filter", "ideal", "--trials", "0"]);
    assert!((f(&r["analytic_mse"]) - 2.0 * 9.0 / 32.0).abs() < 1e-12);
    assert!(f(&r["profile_spread"]) < 1e-10);
    assert!(r["mc_mse"].is_null());

    let r = run_json(&["sample-mse", "--trials", "500", "--real-noise", "--filter", "raised-cosine"]);
    assert_eq!(r["config"]["noise"], "real");
    assert!((f(&r["decomposition"]["inband"]) - 9.0 / 16.0).abs() < 1e-12);
}

#[test]
fn reconstruct_verb() {
    let r = run_json(&["sample-reconstruct", "--n", "32", "--band", "3", "--period", "2", "--filter", "linear"]);
    assert_eq!(r["perfect_reconstruction"], Value::Bool(true));
    assert!(f(&r["max_error"]) < 1e-9);
    assert!((f(&r["energy_ratio"]) - 1.0).abs() < 1e-10);
    assert_eq!(r["reconstruction"].as_array().unwrap().len(), 32);

    let dir = TempDir::new().unwrap();
    let x: String = (0..16).map(|k| format!("{}\n", (k as f64 * 0.37).sin())).collect();
    let sig = write(&dir, "x.csv", &x);
    let r = run_json(&["sample-reconstruct", "--n", "16", "--band", "2", "--period", "2", "--signal", s(&sig)]);
    assert!(f(&r["max_error"]) > 1e-3, "a non-bandlimited signal is not recovered");
}

#[test]
fn reports_are_deterministic() {
    let args = ["sample-mse", "--n", "32", "--band", "2", "--period", "2", "--trials", "3000", "--seed", "11"];
    let (_, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(a, b);
    let (_, c, _) = run(&["sample-sweep", "--periods", "1,2", "--trials", "1000"]);
    let (_, d, _) = run(&["sample-sweep", "--periods", "1,2", "--trials", "1000"]);
    assert_eq!(c, d);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["frame-frobnicate"],
        vec!["frame-bounds"],
        vec!["frame-bounds", "--input", "x.json", "--bogus"],
        vec!["frame-bounds", "--input", "x.json", "--format", "csv"],
        vec!["gabor-check", "--proto", "delta", "--shift", "1", "--mods", "4"],
        vec!["sample-mse", "--n", "sixty"],
        vec!["sample-sweep", "--periods", "1,2", "--period", "2"],
        vec!["sample-mse", "--sigma2", "-1"],
        vec![],
    ] {
        let (code, _, err) = run(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("sample-sweep"));
}

#[test]
fn domain_errors_exit_1_with_code() {
    let dir = TempDir::new().unwrap();
    let cases: Vec<(Vec<String>, &str)> = vec![
        (vec!["frame-bounds".into(), "--input".into(), dir.path().join("missing.json").display().to_string()], "io_error"),
        (
            vec!["frame-bounds".into(), "--input".into(), s(&write(&dir, "bad.json", "{\"rows\":1}")).into()],
            "parse_error",
        ),
        (vec!["sample-mse".into(), "--n".into(), "63".into()], "invalid_params"),
        (
            vec!["sample-mse".into(), "--n".into(), "64".into(), "--band".into(), "10".into(), "--period".into(), "4".into()],
            "aliasing",
        ),
        (
            vec!["sample-mse".into(), "--filter".into(), s(&write(&dir, "f.json", r#"{"dontcare":[{"bin":2,"re":1}]}"#)).into()],
            "protected_bin",
        ),
        (vec!["gabor-build".into(), "--proto".into(), "delta".into(), "--n".into(), "6".into(), "--shift".into(), "4".into(), "--mods".into(), "2".into()], "invalid_params"),
    ];
    for (args, want) in cases {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, out, _) = run(&argv);
        assert_eq!(code, 1, "{args:?}: {out}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"], want, "{args:?}");
        assert!(v["detail"].is_string());
    }
}

#[test]
fn binary_matches_library_entry_point() {
    let dir = TempDir::new().unwrap();
    let mb = mercedes_benz(&dir, (2.0f64 / 3.0).sqrt());
    let out = Command::new(env!("CARGO_BIN_EXE_framekit"))
        .args(["frame-bounds", "--input", s(&mb)])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let (_, lib, _) = run(&["frame-bounds", "--input", s(&mb)]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib);

    let out = Command::new(env!("CARGO_BIN_EXE_framekit")).arg("nope").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_framekit"))
        .args(["frame-dual", "--input", s(&write(&dir, "c.csv", "1,2\n2,4\n"))])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
