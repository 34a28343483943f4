//! End-to-end checks of the installed binary: output formats and the
//! documented exit codes (0 decision made, 1 malformed input, 2 internal
//! failure).

use std::process::Command;

fn braid3(args: &[&str]) -> (String, String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_braid3"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code(),
    )
}

#[test]
fn burau_text_and_json() {
    let (stdout, _, code) = braid3(&["burau", "ab"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "[[0, -t], [t, -t]]");

    let (stdout, _, code) = braid3(&["--json", "burau", "a"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).expect("valid json");
    assert_eq!(v["word"], "a");
    assert_eq!(v["matrix"][0][0], serde_json::json!([{ "exp": 1, "coef": -1 }]));
    assert_eq!(v["matrix"][1][0], serde_json::json!([]));
}

#[test]
fn burau_integral_and_mod() {
    let (stdout, _, code) = braid3(&["burau", "b", "--at", "-1"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "[[1,0],[-1,1]]");

    let (stdout, _, code) = braid3(&["burau", "a", "--mod", "2"]);
    assert_eq!(code, Some(0));
    assert_eq!(stdout.trim(), "[[t, 1], [0, 1]]");
}

#[test]
fn decision_commands() {
    let (stdout, _, code) = braid3(&["equal", "aba", "bab"]);
    assert_eq!((stdout.trim(), code), ("equal", Some(0)));

    let (stdout, _, code) = braid3(&["equal", "a", "b"]);
    assert_eq!((stdout.trim(), code), ("distinct", Some(0)));

    let (stdout, _, code) = braid3(&["--json", "conjugate", "a", "b", "--witness"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["decision"], "conjugate");
    assert!(v["witness"].is_string());

    let (stdout, _, code) = braid3(&["conjugate", "a", "A"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("not conjugate"));
}

#[test]
fn pi_and_psl2() {
    let (stdout, _, code) = braid3(&["pi", "abaa"]);
    assert_eq!((stdout.trim(), code), ("-1", Some(0)));

    let (stdout, _, code) = braid3(&["psl2", "abaBAB"]);
    assert_eq!((stdout.trim(), code), ("1", Some(0)));
}

#[test]
fn malformed_input_exits_one() {
    let (_, stderr, code) = braid3(&["burau", "abq"]);
    assert_eq!(code, Some(1));
    assert!(stderr.contains("offset 2"), "stderr: {stderr}");

    let (_, _, code) = braid3(&["moody", "ab"]);
    assert_eq!(code, Some(1));

    let (_, _, code) = braid3(&["burau", "a", "--mod", "1"]);
    assert_eq!(code, Some(1));
}

#[test]
fn words_from_file() {
    let dir = std::env::temp_dir().join(format!("braid3-smoke-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("words.txt");
    std::fs::write(&path, "a\nab\n").unwrap();
    let (stdout, _, code) = braid3(&["burau", "--file", path.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "[[-t, 1], [0, 1]]");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn moody_json_schema() {
    let (stdout, _, code) = braid3(&["--json", "moody", "bbbb"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["crossings"], 2);
    assert_eq!(v["cp_sequence"], serde_json::json!([2]));
    assert_eq!(
        v["polynomial"],
        serde_json::json!([{ "exp": 0, "coef": 1 }, { "exp": 2, "coef": 1 }])
    );
}
