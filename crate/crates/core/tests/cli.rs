use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn neutro(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_neutro"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn neutro");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn analyze_jsonl_from_stdin() {
    let input = "{\"id\":\"p\",\"t\":0.6,\"i\":0.5,\"f\":0.4}\n{\"t\":1,\"i\":0,\"f\":0}\n";
    let v = json(&neutro(
        &["analyze", "--format", "jsonl", "--tnorm", "frank:2"],
        Some(input),
    ));
    assert_eq!(v["tnorm"], "frank:2");
    assert_eq!(v["count"], 2);
    assert_eq!(v["records"][0]["id"], "p");
    assert_eq!(v["records"][0]["scalars"]["eta"], 0.1);
    assert_eq!(v["records"][0]["penta_def"]["o"], 0.333333333333);
    assert!(v["records"][1]["id"].is_null());
}

#[test]
fn analyze_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let (input, out) = (dir.path().join("in.csv"), dir.path().join("out.json"));
    fs::write(&input, "T,I,F\n0.2,0.3,0.4\n").unwrap();
    let run = neutro(
        &[
            "analyze",
            "--input",
            input.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
            "--profile",
            "sqrt",
        ],
        None,
    );
    assert!(run.status.success(), "{}", stderr(&run));
    assert!(run.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["profile"], "sqrt");
    assert_eq!(v["records"].as_array().unwrap().len(), 1);
}

#[test]
fn rank_orders_by_score() {
    let csv = "id,T,I,F\nlow,0,0,1\ntie1,0.5,0.1,0.5\nhigh,1,0,0\ntie2,0.5,0.9,0.5\n";
    let v = json(&neutro(&["rank"], Some(csv)));
    let ids: Vec<_> = v["ranking"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["high", "tie1", "tie2", "low"]);
}

#[test]
fn logic_examples() {
    let v = json(&neutro(
        &[
            "logic",
            "--op",
            "negation",
            "--scheme",
            "penta-sat",
            "--lhs",
            "1,1,1",
        ],
        None,
    ));
    assert_eq!(v["result"], v["lhs"]["vector"]);
    assert_eq!(v["result"]["s"], 1.0);

    let v = json(&neutro(
        &[
            "logic",
            "--op",
            "intersection",
            "--lhs",
            "0,0,0",
            "--rhs",
            "1,0,0",
        ],
        None,
    ));
    assert_eq!(v["result"]["w"], 1.0);
    assert_eq!(v["result_sum"], 1.0);
}

#[test]
fn validation_errors_exit_1() {
    let cases: &[(&[&str], Option<&str>, &str)] = &[
        (
            &["logic", "--op", "union", "--lhs", "1,0,0"],
            None,
            "right-hand operand",
        ),
        (
            &[
                "logic", "--op", "negation", "--lhs", "1,0,0", "--rhs", "0,0,1",
            ],
            None,
            "single operand",
        ),
        (
            &["logic", "--op", "union", "--lhs", "1,0", "--rhs", "0,0,1"],
            None,
            "T,I,F",
        ),
        (
            &["logic", "--op", "xor", "--lhs", "1,0,0"],
            None,
            "unknown operator",
        ),
        (
            &["analyze", "--tnorm", "frank:1"],
            Some("T,I,F\n0,0,0\n"),
            "frank",
        ),
        (
            &["analyze", "--profile", "cubic"],
            Some("T,I,F\n0,0,0\n"),
            "unknown definedness profile",
        ),
        (
            &["analyze"],
            Some("id,T,I,F\na,0,0,0\na,1,1,1\n"),
            "line 3: duplicate id",
        ),
        (
            &["analyze"],
            Some("id,T,I,F\na,0,0,-0.5\n"),
            "line 2: component F",
        ),
        (&["selfcheck", "--samples", "0"], None, "samples"),
    ];
    for (args, input, needle) in cases {
        let out = neutro(args, *input);
        assert_eq!(out.status.code(), Some(1), "{args:?}: {}", stderr(&out));
        assert!(
            stderr(&out).to_lowercase().contains(&needle.to_lowercase()),
            "{args:?}: {}",
            stderr(&out)
        );
    }
}

#[test]
fn missing_input_exits_2() {
    let out = neutro(&["analyze", "--input", "/definitely/not/here.csv"], None);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
}

#[test]
fn selfcheck_is_deterministic() {
    let a = neutro(&["selfcheck", "--samples", "500", "--seed", "7"], None);
    let b = neutro(&["selfcheck", "--samples", "500", "--seed", "7"], None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("selfcheck samples=500 seed=7"));
    assert!(text.trim_end().ends_with("properties passed"));
    assert!(!text.contains("FAIL"));
}
