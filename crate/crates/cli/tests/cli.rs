use std::fs;

use nil3_cli::{run, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn nil3(args: &[&str]) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("nil3").chain(args.iter().copied()), &mut out, &mut err);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut with = args.to_vec();
    with.push("--json");
    let o = nil3(&with);
    (o.code, serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout)))
}

#[test]
fn verify_type1() {
    let o = nil3(&["verify", "--type", "1", "--a", "0.5", "--c", "1", "--grid", "21", "--tol", "1e-8"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.contains("PASS"));
    let (_, v) = json(&["verify", "--type", "1", "--a", "0.5", "--c", "1", "--grid", "21", "--tol", "1e-8"]);
    let r = &v["records"][0];
    assert!(r["max_abs_h"].as_f64().unwrap() < 1e-8);
    assert_eq!(r["samples"], 441);
}

#[test]
fn verify_reports_d_nonzero_as_failure() {
    let args = ["verify", "--type", "2", "--variant", "i", "--a", "1", "--b", "0.2", "--d", "0.5"];
    let o = nil3(&args);
    assert_eq!(o.code, EXIT_CHECK_FAILED);
    assert!(o.stdout.contains("warning"));
    let (_, v) = json(&args);
    assert!(v["records"][0]["max_abs_h"].as_f64().unwrap() > 1e-3);
    assert_eq!(v["records"][0]["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_random_draws_for_every_variant() {
    for (t, v) in [("1", "single"), ("2", "i"), ("2", "ii"), ("3", "i"), ("3", "ii")]
        .into_iter()
        .chain([("4", "single"), ("5", "i"), ("5", "ii"), ("6", "i"), ("6", "ii")])
    {
        let o = nil3(&["verify", "--type", t, "--variant", v, "--draws", "5", "--seed", "11"]);
        assert_eq!(o.code, EXIT_OK, "type {t}({v}): {}{}", o.stdout, o.stderr);
    }
}

#[test]
fn generic_scheme_uses_looser_default() {
    let (code, v) = json(&["verify", "--type", "5", "--variant", "ii", "--draws", "3", "--generic"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["records"][0]["tolerance"], 1e-6);
    assert_eq!(v["records"][0]["scheme"], "generic");
}

#[test]
fn type3_display_form_fails() {
    let args = ["verify", "--type", "3", "--variant", "ii", "--a", "0.4", "--b", "1", "--c", "0.5"];
    assert_eq!(nil3(&args).code, EXIT_OK);
    let mut display = args.to_vec();
    display.extend(["--type3-form", "display"]);
    assert_eq!(nil3(&display).code, EXIT_CHECK_FAILED);
}

#[test]
fn starred_cases_with_sine_fail() {
    let o = nil3(&["cases", "--starred", "--profile", "sin"]);
    assert_eq!(o.code, EXIT_CHECK_FAILED);
    let (_, v) = json(&["cases", "--starred", "--profile", "sin"]);
    let rows = v["records"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for r in rows {
        assert!(r["max_abs_residual"].as_f64().unwrap() > 1e-3, "{r}");
        assert_eq!(r["expected_minimal"], false);
    }
}

#[test]
fn affine_cases_pass() {
    let (code, v) = json(&["cases", "--profile", "affine"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["records"].as_array().unwrap().len(), 12);
}

#[test]
fn unstarred_rows_accept_any_profile() {
    let (_, v) = json(&["cases", "--profile", "quadratic"]);
    for r in v["records"].as_array().unwrap() {
        assert_eq!(r["minimal"], r["expected_minimal"], "{r}");
    }
}

fn obj_counts(text: &str) -> (usize, Vec<[usize; 3]>) {
    let vertices = text.lines().filter(|l| l.starts_with("v ")).count();
    let faces = text
        .lines()
        .filter_map(|l| l.strip_prefix("f "))
        .map(|l| {
            let i: Vec<usize> = l.split(' ').map(|s| s.parse().unwrap()).collect();
            [i[0], i[1], i[2]]
        })
        .collect();
    (vertices, faces)
}

#[test]
fn mesh_export() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("family.json");
    fs::write(&spec, r#"{"type":2,"variant":"ii","params":{"a":0.5,"b":1,"c":0.3}}"#).unwrap();
    let obj = dir.path().join("surf.obj");
    let args = ["mesh", "--spec", spec.to_str().unwrap(), "--grid", "64", "--out", obj.to_str().unwrap()];
    assert_eq!(nil3(&args).code, EXIT_OK);
    let first = fs::read(&obj).unwrap();
    let (nv, faces) = obj_counts(std::str::from_utf8(&first).unwrap());
    assert_eq!(nv, 64 * 64);
    assert_eq!(faces.len(), 2 * 63 * 63);
    assert!(faces.iter().flatten().all(|&i| (1..=nv).contains(&i)));

    assert_eq!(nil3(&args).code, EXIT_OK);
    assert_eq!(fs::read(&obj).unwrap(), first);
}

#[test]
fn mesh_shifts_off_the_pole() {
    let o = nil3(&["mesh", "--type", "5", "--variant", "i", "--a", "1", "--grid", "5", "--domain", "0.1"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let (nv, faces) = obj_counts(&o.stdout);
    assert_eq!((nv, faces.len()), (25, 32));
}

#[test]
fn scan_csv() {
    let o = nil3(&["scan", "--type", "1", "--grid", "3"]);
    assert_eq!(o.code, EXIT_OK);
    let lines: Vec<_> = o.stdout.lines().collect();
    assert_eq!(lines[0], "x,y,H,residual,K_gauss,K_brioschi,skipped");
    assert_eq!(lines.len(), 10);
    // K = -1/(1+y^2)^2 at y = -1
    let k: f64 = lines[1].split(',').nth(4).unwrap().parse().unwrap();
    assert!((k + 0.25).abs() < 1e-8);
}

#[test]
fn scan_to_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    let args = ["scan", "--type", "6", "--variant", "ii", "--a", "0.7", "--b", "-0.5", "--out", path.to_str().unwrap()];
    assert_eq!(nil3(&args).code, EXIT_OK);
    let first = fs::read(&path).unwrap();
    assert_eq!(nil3(&args).code, EXIT_OK);
    assert_eq!(fs::read(&path).unwrap(), first);
}

#[test]
fn seeds_determine_output() {
    let a = nil3(&["verify", "--type", "2", "--variant", "ii", "--draws", "4", "--seed", "7", "--json"]);
    let b = nil3(&["verify", "--type", "2", "--variant", "ii", "--draws", "4", "--seed", "7", "--json"]);
    let c = nil3(&["verify", "--type", "2", "--variant", "ii", "--draws", "4", "--seed", "8", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn ode_oracle_and_route() {
    for (t, v) in [("1", "single"), ("2", "ii"), ("3", "ii"), ("4", "single"), ("5", "ii"), ("6", "ii")] {
        let (code, out) = json(&["ode", "--type", t, "--variant", v, "--draws", "3", "--seed", "5"]);
        assert_eq!(code, EXIT_OK, "{out}");
        for r in out["records"].as_array().unwrap() {
            assert!(r["oracle"]["max_error"].as_f64().unwrap() < 1e-7);
        }
    }
    let (_, out) = json(&["ode", "--type", "6", "--variant", "i", "--a", "1", "--b", "2"]);
    assert_eq!(out["records"][0]["route"], "geometric");
    assert!(out["records"][0]["oracle"].is_null());
}

#[test]
fn catalog_lists_flags_and_arbitration() {
    let (code, v) = json(&["catalog", "--draws", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["families"].as_array().unwrap().len(), 10);
    assert_eq!(v["missing_cases"].as_array().unwrap().len(), 12);
    let ids: Vec<_> = v["flags"].as_array().unwrap().iter().map(|f| f["id"].as_str().unwrap()).collect();
    for id in ["type3-display", "d-zero", "type6-sign", "flatness"] {
        assert!(ids.contains(&id), "{id}");
    }
    for a in v["arbitration"].as_array().unwrap() {
        assert_eq!(a["default_passes"], true);
        assert_eq!(a["outcomes"].as_array().unwrap().iter().filter(|o| o["pass"] == true).count(), 1);
    }
    assert_eq!(v["flatness"]["contradicts_flatness_remark"], true);
}

#[test]
fn usage_errors() {
    for args in [
        &["verify"][..],
        &["verify", "--type", "7"],
        &["verify", "--type", "2"],
        &["verify", "--type", "1", "--d", "1"],
        &["verify", "--type", "1", "--grid", "1"],
        &["verify", "--spec", "{\"type\": 1, \"bogus\": 2}"],
        &["verify", "--spec", "/nonexistent/family.json"],
        &["verify", "--type", "1", "--a", "1", "--draws", "2"],
        &["frobnicate"],
        &[],
    ] {
        let o = nil3(args);
        assert_eq!(o.code, EXIT_USAGE, "{args:?}: {}", o.stdout);
        assert!(o.stderr.starts_with("error"), "{args:?}: {}", o.stderr);
    }
}

#[test]
fn json_errors_are_machine_readable() {
    let o = nil3(&["verify", "--type", "2", "--json"]);
    assert_eq!(o.code, EXIT_USAGE);
    let v: Value = serde_json::from_str(o.stderr.trim()).unwrap();
    assert_eq!(v["kind"], "usage");
    let o = nil3(&["verify", "--json", "--grid", "x"]);
    let v: Value = serde_json::from_str(o.stderr.trim()).unwrap();
    assert_eq!(v["kind"], "usage");
}

#[test]
fn inline_spec_and_flag_override() {
    let o = nil3(&["verify", "--spec", r#"{"type":4,"params":{"a":0.2}}"#, "--c", "0.6"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.starts_with("type 4 a=0.2, c=0.6"));
    assert_eq!(nil3(&["verify", "--spec", r#"{"type":4}"#, "--type", "1"]).code, EXIT_USAGE);
}

#[test]
fn help_exits_zero() {
    let o = nil3(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("verify"));
}
