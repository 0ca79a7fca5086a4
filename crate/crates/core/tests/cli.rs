use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ohgraph"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, content: &[u8]) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path
}

#[test]
fn laplacian_spectrum_of_worked_example() {
    let out = run(&[
        "spectrum",
        &fixture("triangle_pendant.json"),
        "--matrix",
        "laplacian",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4.56155281281\n2\n1\n0.438447187191\n");

    let out = run(&[
        "spectrum",
        &fixture("triangle_pendant.json"),
        "--format",
        "json",
    ]);
    assert_eq!(
        json(&out),
        serde_json::json!([4.56155281281, 2.0, 1.0, 0.438447187191])
    );
}

#[test]
fn adjacency_spectrum_snaps_zeros() {
    let out = run(&[
        "spectrum",
        &fixture("cancelling_pair.json"),
        "--matrix",
        "adjacency",
    ]);
    assert_eq!(stdout(&out), "0\n0\n");
}

#[test]
fn matrices_of_worked_example() {
    let out = run(&[
        "matrices",
        &fixture("triangle_pendant.json"),
        "--which",
        "L",
    ]);
    let v = json(&out);
    assert_eq!(
        v["L"],
        serde_json::json!([[2, 1, 1, 0], [1, 2, 1, 0], [1, 1, 3, 1], [0, 0, 1, 1]])
    );
    assert!(v.get("H").is_none());

    let out = run(&["matrices", &fixture("e2pp.json"), "--format", "text"]);
    let text = stdout(&out);
    assert!(text.starts_with("H (2x1)\n  1\n  1\n"));
    assert!(text.contains("L (2x2)\n  1   1\n  1   1\n"));
}

#[test]
fn verify_reports_hold_on_fixtures() {
    for name in [
        "triangle_pendant.json",
        "mixed_hyperedges.json",
        "cancelling_pair.json",
        "empty.json",
    ] {
        let out = run(&["verify", &fixture(name)]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let checks = json(&out);
        let checks = checks.as_array().unwrap();
        assert!(!checks.is_empty());
        for c in checks {
            match c["status"].as_str().unwrap() {
                "evaluated" => assert_eq!(c["holds"], Value::Bool(true)),
                "skipped" => assert!(c["reason"].is_string()),
                other => panic!("unexpected status {other}"),
            }
        }
    }
    let out = run(&[
        "verify",
        &fixture("cancelling_pair.json"),
        "--only",
        "lap_delta_lower_bound",
    ]);
    let v = json(&out);
    assert_eq!(v[0]["status"], "skipped");
    assert_eq!(v[0]["reason"], "hypergraph is not linear");
}

#[test]
fn verify_only_and_k() {
    let out = run(&[
        "verify",
        &fixture("triangle_pendant.json"),
        "--only",
        "adj_moment_bound",
        "--k",
        "4",
    ]);
    let v = json(&out);
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["context"], "k=4");
    assert_eq!(v[0]["relation"], "at_most");

    let out = run(&[
        "verify",
        &fixture("triangle_pendant.json"),
        "--only",
        "no_such_bound",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("adj_radius_bound"));

    let out = run(&["verify", &fixture("triangle_pendant.json"), "--k", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

#[test]
fn switch_equiv_finds_two_vertex_flip() {
    let out = run(&["switch-equiv", &fixture("e2pp.json"), &fixture("e2mm.json")]);
    assert!(out.status.success());
    assert_eq!(
        json(&out),
        serde_json::json!({"found": true, "zeta": "-,-"})
    );

    let out = run(&[
        "switch-equiv",
        &fixture("e2pp.json"),
        &fixture("star3.json"),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn transforms_emit_documents() {
    let out = run(&["switch", &fixture("e2pp.json"), "--zeta", "-,-"]);
    assert_eq!(out.stdout, fs::read(fixture("e2mm.json")).unwrap());

    let out = run(&["switch", &fixture("e2pp.json"), "--zeta", "+"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["dual", &fixture("star3.json")]);
    let v = json(&out);
    assert_eq!(v["vertices"], serde_json::json!(["s1", "s2", "s3"]));
    assert_eq!(v["edges"][0]["label"], "c");

    let out = run(&[
        "delete-vertex",
        &fixture("triangle_pendant.json"),
        "--v",
        "v3",
    ]);
    let v = json(&out);
    assert_eq!(v["vertices"], serde_json::json!(["v0", "v1", "v2"]));
    assert_eq!(
        v["edges"][3]["incidences"],
        serde_json::json!([{"v": "v2", "sign": 1}])
    );

    let out = run(&[
        "delete-edge",
        &fixture("triangle_pendant.json"),
        "--e",
        "e3",
    ]);
    assert_eq!(json(&out)["edges"].as_array().unwrap().len(), 3);

    let out = run(&[
        "delete-edge",
        &fixture("triangle_pendant.json"),
        "--e",
        "nope",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cospectral_modes() {
    let dir = tempfile::tempdir().unwrap();
    let dual = run(&["dual", &fixture("e2pp.json")]).stdout;
    let dual_path = write(dir.path(), "dual.json", &dual);
    let d = dual_path.to_str().unwrap();

    let full = json(&run(&["cospectral", &fixture("e2pp.json"), d]));
    assert_eq!(full["cospectral"], Value::Bool(false));
    assert_eq!(full["mode"], "full");
    let nonzero = json(&run(&["cospectral", &fixture("e2pp.json"), d, "--nonzero"]));
    assert_eq!(nonzero["cospectral"], Value::Bool(true));

    let adj = json(&run(&[
        "cospectral",
        &fixture("e2pp.json"),
        &fixture("e2mm.json"),
        "--matrix",
        "adjacency",
    ]));
    assert_eq!(adj["cospectral"], Value::Bool(true));
    assert_eq!(adj["spectra"][0], serde_json::json!([1.0, -1.0]));
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad_sign = write(
        dir.path(),
        "bad.json",
        br#"{"vertices":["a"],"edges":[{"label":"e","incidences":[{"v":"a","sign":0}]}]}"#,
    );
    let out = run(&["verify", bad_sign.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("got 0"));

    let syntax = write(dir.path(), "syntax.json", b"{\n  \"vertices\": [,]\n}");
    let out = run(&["spectrum", syntax.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    assert_eq!(run(&["verify"]).status.code(), Some(1));
    assert_eq!(
        run(&["verify", &fixture("e2pp.json"), "--bogus"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["verify", "/definitely/missing.json"]).status.code(),
        Some(1)
    );
    let out = run(&[
        "random",
        "--seed",
        "1",
        "--n",
        "2",
        "--m",
        "1",
        "--size-max",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn random_and_hunt_are_deterministic() {
    let args = [
        "random", "--seed", "9", "--n", "5", "--m", "4", "--p-neg", "0",
    ];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let doc = json(&a);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 5);
    assert!(stdout(&a).matches("\"sign\": 1").count() > 0);
    assert!(!stdout(&a).contains("\"sign\": -1"));

    let hunt = [
        "hunt",
        "--seed",
        "3",
        "--trials",
        "200",
        "--n",
        "4",
        "--m",
        "3",
        "--size-min",
        "0",
        "--size-max",
        "3",
    ];
    let (a, b) = (run(&hunt), run(&hunt));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    for line in stdout(&a).lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert!(v["trial"].is_u64() && v["first"]["vertices"].is_array());
    }
}
