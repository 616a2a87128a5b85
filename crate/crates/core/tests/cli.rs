use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kirchhoff")).args(args).output().unwrap()
}

fn report(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn poincare_of_k4() {
    let r = report(&["poincare", &data("k4.g")]);
    assert_eq!(r["results"]["poincare"], json!([1, 3, 6, 10, 11, 6, 1]));
    assert_eq!(r["results"]["value_at_one"], json!(38));
    assert_eq!(r["command"], "poincare");
}

#[test]
fn theta_of_triangle_both_methods() {
    let r = report(&["theta", &data("c3.g"), "--max-norm", "12", "--method", "both"]);
    let expected = json!([[0, 1], [3, 2], [12, 2]]);
    assert_eq!(r["results"]["product"], expected);
    assert_eq!(r["results"]["enumerate"], expected);
    assert_eq!(r["checks"][0]["status"], "pass");
}

#[test]
fn ranks_of_forest_from_all_oracles() {
    let r = report(&["ranks", &data("forest.g"), "--oracle", "all"]);
    for oracle in ["tutte", "relations", "monomials"] {
        assert_eq!(r["results"][oracle], json!([1]), "{oracle}");
    }
    let r = report(&["ranks", &data("k4.g"), "--oracle", "relations"]);
    assert_eq!(r["results"]["relations"], json!([1, 3, 6, 10, 11, 6, 1]));
}

#[test]
fn rationals_are_exact_strings() {
    let r = report(&["char-flow", &data("k4.g"), "--edge", "1"]);
    assert_eq!(r["results"]["norm"], "2/1");
    assert_eq!(r["results"]["flow"], json!(["1/1", "-1/2", "-1/2", "1/2", "1/2", "0/1"]));
    let r = report(&["char-flow", &data("k4.g"), "--edge", "1", "--direction", "reverse"]);
    assert_eq!(r["results"]["flow"][0], "-1/1");
}

#[test]
fn codichromatic_pair() {
    let r = report(&["compare", &data("pair_left.g"), &data("pair_right.g"), "--max-norm", "8"]);
    assert_eq!(r["results"]["tutte_equal"], json!(true));
    let left = report(&["flows-of-norm", &data("pair_left.g"), "--norm", "7"]);
    let right = report(&["flows-of-norm", &data("pair_right.g"), "--norm", "7"]);
    assert_eq!((left["results"]["count"].clone(), right["results"]["count"].clone()), (json!(20), json!(22)));
}

#[test]
fn torsion_of_triangle() {
    let r = report(&["torsion", &data("c3.g"), "--degrees", "1,2"]);
    assert_eq!(r["results"]["invariant_factors"], json!([3]));
}

#[test]
fn lattice_and_verify_pass() {
    let r = report(&["lattice", &data("k4.g")]);
    assert_eq!(r["results"]["determinant"], json!(16));
    let r = report(&["verify", &data("k4.g"), "--all"]);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));
}

#[test]
fn corpus_command_runs() {
    let r = report(&["corpus", "--max-edges", "3", "--flip-trials", "2"]);
    assert_eq!(r["results"]["graph_count"], json!(18));
}

#[test]
fn reports_are_deterministic_up_to_timings() {
    let strip = |out: Output| {
        let text = String::from_utf8(out.stdout).unwrap();
        let cut = text.find("\"timings_us\"").unwrap();
        text[..cut].to_owned()
    };
    for args in [
        vec!["poincare", "k4.g"],
        vec!["theta", "k4.g"],
        vec!["ranks", "k4.g"],
        vec!["char-flow", "k4.g", "--edge", "3"],
        vec!["compare", "pair_left.g", "pair_right.g"],
        vec!["tutte", "pair_right.g"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| if a.ends_with(".g") { data(a) } else { a.to_string() })
            .collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(strip(run(&args)), strip(run(&args)), "{args:?}");
    }
}

#[test]
fn digest_tracks_input_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_temp(&dir, "a.g", "vertex 1\nedge 1 1 1\n");
    let b = write_temp(&dir, "b.g", "# same graph\nvertex 1\nedge 1 1 1\n");
    let da = report(&["poincare", &a])["input_digest"].clone();
    let db = report(&["poincare", &b])["input_digest"].clone();
    assert_ne!(da, db);
    assert_eq!(da.as_str().unwrap().len(), 64);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let dup = write_temp(&dir, "dup.g", "vertex 1\nedge 1 1 1\nedge 1 1 1\n");
    let out = run(&["poincare", &dup]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert!(out.stdout.is_empty());

    let unknown = write_temp(&dir, "unknown.g", "vertex 1\nedge 1 1 2\n");
    assert_eq!(run(&["tutte", &unknown]).status.code(), Some(2));
    assert_eq!(run(&["tutte", &dir.path().join("missing.g").to_string_lossy()]).status.code(), Some(2));
    assert_eq!(run(&["char-flow", &data("k4.g"), "--edge", "99"]).status.code(), Some(2));
    assert_eq!(run(&["char-flow", &data("forest.g"), "--edge", "1"]).status.code(), Some(2));
    assert_eq!(run(&["torsion", &data("c3.g"), "--degrees", "1"]).status.code(), Some(2));
    assert_eq!(run(&["theta", &data("c3.g"), "--method", "guess"]).status.code(), Some(2));
}

#[test]
fn capacity_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::new();
    for v in 1..=21 {
        text += &format!("vertex {v}\n");
    }
    for i in 1..=21 {
        text += &format!("edge {i} {i} {}\n", i % 21 + 1);
    }
    let big = write_temp(&dir, "c21.g", &text);
    let out = run(&["ranks", &big]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(run(&["corpus", "--max-edges", "10"]).status.code(), Some(3));
}
