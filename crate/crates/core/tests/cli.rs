//! Command-line round trips through `cli::run`.

use serde_json::Value;
use shw::cli::{parse_tuples, run};
use std::io::Write;

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.exit_code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let v: Value = serde_json::from_str(&ok(&full)).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

#[test]
fn bracket_text_and_json() {
    assert_eq!(ok(&["bracket", "--dim", "1", "--order", "1", "--", "-2*x", "1"]), "2\n");
    assert_eq!(ok(&["bracket", "--dim", "2", "--order", "1", "x", "y", "y^-1"]), "2*y^-1\n");
    assert_eq!(ok(&["bracket", "--dim", "2", "--order", "1", "--mode", "cofactor", "1", "y", "x^2"]), "-2*x\n");
    let v = json(&["bracket", "--dim", "2", "--order", "2", "1", "x", "y", "x^2", "x*y", "x*y^2"]);
    assert_eq!(v["command"], "bracket");
    assert_eq!(v["result"], "4*x");
}

#[test]
fn index_commands() {
    assert_eq!(ok(&["rows", "--dim", "2", "--order", "2"]), "0,0;1,0;0,1;2,0;1,1;0,2\n");
    assert_eq!(ok(&["shift", "--dim", "2", "--order", "2"]), "per_coordinate: 4\ntotal: 8\n");
    let v = json(&["shift", "--dim", "3", "--order", "1"]);
    assert_eq!(v["per_coordinate"], "1");
}

#[test]
fn closed_form_commands() {
    assert_eq!(ok(&["vandermonde", "--dim", "2", "--order", "2", "--tuples", "0,0;1,0;0,1;2,0;1,1;0,2"]), "4\n");
    assert_eq!(ok(&["structure", "--dim", "2", "--order", "1", "--row", "1,0", "x^2"]), "2*x\n");
    assert_eq!(ok(&["golden", "--dim", "2", "--order", "1", "--p", "x^2", "--q", "x*y"]), "-x^2*y\n");
    assert_eq!(ok(&["witt", "--dim", "1", "--order", "1", "--indices", "3;5"]), "omega: 2\nsum: 8\nshift: 1\n");
    let v = json(&["witt", "--dim", "1", "--order", "1", "--indices", "3;5"]);
    assert_eq!(v["omega"], "2");
    assert_eq!(parse_tuples("1,2;3/2,-1", 2).unwrap().len(), 2);
}

#[test]
fn lab_commands() {
    let out = ok(&["classify", "--dim", "2", "--order", "1", "1", "x", "y", "x^2", "x*y"]);
    assert!(out.starts_with("class: chubby\n"), "{out}");
    let out = ok(&["closure", "--dim", "2", "--order", "1", "1", "x", "y", "x*y"]);
    assert!(out.contains("status: stabilized") && out.contains("dims: 4 4"), "{out}");
    let out = ok(&["perfect", "--dim", "3", "--order", "1", "1", "x", "y", "z", "x*y"]);
    assert!(out.contains("perfect: false") && out.contains("missing: z"), "{out}");
    let out = ok(&["diagnose", "--dim", "2", "--order", "1", "1", "x", "y"]);
    assert!(out.contains("x: 1 exact"), "{out}");
    let v = json(&["classify", "--dim", "2", "--order", "1", "1", "x", "y", "x*y"]);
    assert_eq!(v["class"], "lonely");
}

#[test]
fn algebra_file_input() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"dim": 2, "order": 1, "generators": ["1", "x", "y", "x^2"]}}"#).unwrap();
    let path = f.path().to_str().unwrap();
    let out = ok(&["closure", "--algebra", path]);
    assert!(out.contains("dims: 4 4"), "{out}");
    let out = ok(&["classify", "--algebra", path]);
    assert!(out.starts_with("class: lonely"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bracket", "--dim", "1", "--order", "1", "x^", "1"]).exit_code, 1);
    assert_eq!(run(&["bracket", "--dim", "1", "--order", "1", "x"]).exit_code, 1);
    assert_eq!(run(&["bracket", "--dim", "0", "--order", "1", "x"]).exit_code, 1);
    assert_eq!(run(&["bracket", "--dim", "1", "--order", "1", "--bogus", "1", "x"]).exit_code, 2);
    assert_eq!(run(&["frobnicate"]).exit_code, 2);
    assert_eq!(run(&["rows", "--dim", "2"]).exit_code, 2);
    assert_eq!(run(&["--help"]).exit_code, 0);
    let err = run(&["closure", "--algebra", "/nonexistent/file.json"]);
    assert_eq!(err.exit_code, 1);
    assert!(err.stderr.starts_with("error:"));
}
