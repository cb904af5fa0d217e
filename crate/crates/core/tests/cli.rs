//! The installed binary: exit codes, stdin input and JSON layout.

use std::io::Write;
use std::process::{Command, Stdio};

fn stringy(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_stringy"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn reads_stdin() {
    let (code, out, _) = stringy(&["classify"], Some("x^2 + y^2 + z^2 + w^2\n"));
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "terminal");
}

#[test]
fn accepts_json_support() {
    let input = r#"{"n": 3, "monomials": [[2,0,0],[0,2,0],[0,0,2]], "assert_nondegenerate": true, "assert_isolated": true}"#;
    let (code, out, err) = stringy(&["--json", "estring", "--method=crepant", input], None);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains(r#""e_crepant": {"#));
    assert!(!err.contains("not verified"));
}

#[test]
fn exit_codes() {
    assert_eq!(stringy(&["estring"], Some("x^2 + + y")).0, 1);
    assert_eq!(stringy(&["frobnicate"], None).0, 1);
    let (code, _, err) = stringy(&["estring", "--method=both", "x^5+y^3+z^3+w^3"], None);
    assert_eq!(code, 2);
    assert!(err.contains("not crepant"));
    assert_eq!(stringy(&["estring", "--method=crepant", "x^3+y^3"], None).0, 2);
}

#[test]
fn syntax_error_points_at_the_token() {
    let (_, _, err) = stringy(&["classify", "x^2 + + y"], None);
    assert!(err.contains("\n  x^2 + + y\n        ^"), "{err}");
}

#[test]
fn json_terms_are_ordered_by_degree() {
    let (code, out, _) = stringy(&["--json", "estring", "--method=general", "x^5+y^3+z^3+w^3"], None);
    assert_eq!(code, 0);
    let keys: Vec<&str> = out
        .lines()
        .skip_while(|l| !l.contains("\"e_general\""))
        .skip(2)
        .take_while(|l| !l.contains('}'))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    assert_eq!(keys, ["0,0", "1,1", "1,2", "2,1", "2,2", "2,3", "3,2", "3,3", "3,4", "4,3", "4,4"]);
    assert!(out.contains(r#""den": ["#));
}

#[test]
fn invariants_pass_on_e6() {
    let (code, out, _) = stringy(&["invariants", "--series-degree", "6", "x^4+y^3+z^2"], None);
    assert_eq!(code, 0);
    assert!(out.contains("0 failed"));
}
