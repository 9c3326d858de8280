use serde_json::Value;

use semiclass::cli::run;

fn report(args: &[&str]) -> Value {
    let mut argv = vec!["semiclass"];
    argv.extend_from_slice(args);
    let out = run(argv);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn entry<'a>(rep: &'a Value, name: &str) -> &'a Value {
    rep["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["name"] == name)
        .unwrap_or_else(|| panic!("no entry `{name}`"))
}

fn data(file: &str) -> String {
    format!("{}/data/{file}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn check_cybe_sl2_is_zero() {
    let rep = report(&["check-cybe", "sl2"]);
    assert_eq!(entry(&rep, "cybe_residual")["is_zero"], true);
    assert_eq!(rep["command"][0], "check-cybe");
    assert!(rep["inputs_digest"].as_str().unwrap().starts_with("sha256:"));
}

#[test]
fn moduli_dim_sl3_is_one() {
    let rep = report(&["moduli-dim", "sl3"]);
    assert_eq!(entry(&rep, "dimension")["value"], 1);
    assert_eq!(entry(&rep, "basis")["value"].as_array().unwrap().len(), 1);
}

#[test]
fn torus_report_is_all_zero() {
    let rep = report(&["chart-report", &data("torus.json")]);
    let mut residuals = 0;
    for e in rep["results"].as_array().unwrap() {
        if let Some(z) = e.get("is_zero") {
            assert_eq!(z, true, "{}", e["name"]);
            residuals += 1;
        }
    }
    assert!(residuals > 10);
    assert_eq!(entry(&rep, "centrality")["value"], true);
}

#[test]
fn su2_report_table_and_flatness() {
    let rep = report(&["su2-report", "--xi", "3d:-2"]);
    let table = &entry(&rep, "poisson_table")["value"];
    assert_eq!(table["{a,d}"], "-1*b*c");
    assert_eq!(entry(&rep, "curvature(a, b, tau3)")["is_zero"], true);
    assert_eq!(entry(&rep, "torsion(a, b, c)")["is_zero"], false);
    let canon = report(&["su2-report"]);
    assert_eq!(entry(&canon, "curvature(a, b, tau3)")["is_zero"], false);
}

#[test]
fn j1_accepts_a_xihat_file() {
    let dir = std::env::temp_dir().join(format!("semiclass-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("zero.json");
    std::fs::write(&path, r#"{"algebra": "b2", "value": [[["0","0"],["0","0"]],[["0","0"],["0","0"]]]}"#).unwrap();
    let rep = report(&["j1", "b2", "--xihat", path.to_str().unwrap()]);
    assert_eq!(entry(&rep, "j1_obstruction")["is_zero"], true);
    let sl2 = report(&["j1", "sl2"]);
    assert_eq!(entry(&sl2, "j1_obstruction")["is_zero"], false);
}

#[test]
fn input_errors_exit_one() {
    let out = run(["semiclass", "frobnicate"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("Usage"));
    assert_eq!(run(["semiclass", "moduli-dim", "e8"]).code, 1);
    assert_eq!(run(["semiclass", "cobracket", "so5"]).code, 1);
    assert_eq!(run(["semiclass", "su2-report", "--xi", "4d:1"]).code, 1);

    let dir = std::env::temp_dir().join(format!("semiclass-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "{\"n\": 2,\n \"omega\": [[\"0\" \"1\"]]}").unwrap();
    let out = run(["semiclass", "chart-report", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("position") && out.stderr.contains("line 2"), "{}", out.stderr);
}

#[test]
fn help_exits_zero() {
    let out = run(["semiclass", "--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("selftest"));
}

#[test]
fn reports_are_deterministic() {
    let a = run(["semiclass", "canonical", "sl3"]);
    let b = run(["semiclass", "canonical", "sl3"]);
    assert_eq!(a, b);
}
