use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

fn coverkit(args: &[&str], input: &str, budget: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_coverkit"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    match budget {
        Some(b) => cmd.env("COVERKIT_BUDGET", b),
        None => cmd.env_remove("COVERKIT_BUDGET"),
    };
    let mut child = cmd.spawn().expect("binary runs");
    // commands that take no payload may exit before reading; a broken pipe is fine
    let _ = child.stdin.take().unwrap().write_all(input.as_bytes());
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok_result(args: &[&str], input: &str) -> Value {
    let (code, out, err) = coverkit(args, input, None);
    assert_eq!(code, 0, "stdout: {out}\nstderr: {err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "ok");
    assert!(v["provenance"].as_array().is_some_and(|a| !a.is_empty()));
    v["result"].clone()
}

#[test]
fn count_exact_three_points() {
    assert_eq!(
        ok_result(&["count", "--p", "3", "--g", "0", "--r-exact", "3"], ""),
        json!({"count": "1"})
    );
}

#[test]
fn count_variants() {
    assert_eq!(
        ok_result(&["count", "--p", "2", "--g", "1"], "")["count"],
        "3"
    );
    assert_eq!(
        ok_result(&["count", "--p", "3", "--g", "1", "--r-contained", "2"], "")["count"],
        "13"
    );
    let big = ok_result(&["count", "--p", "7", "--g", "40", "--r-exact", "30"], "");
    assert!(big["count"].as_str().unwrap().len() > 20);
}

#[test]
fn exists_rejects_non_zero_sum() {
    assert_eq!(
        ok_result(
            &["exists", "--p", "3"],
            r#"{"vv":{"coeffs":[{"point":"a","c":1}]}}"#
        ),
        json!({"exists": false})
    );
    let yes = ok_result(&["exists", "--p", "3"], r#"{"vv":{"a":1,"b":2}}"#);
    assert_eq!(yes["exists"], true);
    assert_eq!(yes["witness"]["jac"], json!([]));
}

#[test]
fn rotation_numbers() {
    assert_eq!(
        ok_result(&["rotation", "--p", "5"], r#"{"exps":[2,3]}"#),
        json!({"rotation": {"x1": 3, "x2": 2}})
    );
    assert_eq!(
        ok_result(&["rotation"], r#"{"p":7,"branch":["a","b"],"exps":[3,4]}"#),
        json!({"rotation": {"a": 5, "b": 2}})
    );
}

#[test]
fn equivalent_and_classify() {
    let pair = r#"{"a":{"vv":{},"jac":[0,1]},"b":{"vv":{},"jac":[1,1]}}"#;
    let r = ok_result(&["equivalent", "--p", "2", "--g", "1"], pair);
    assert_eq!(
        r,
        json!({"equivalent": true, "equal": false, "same_cover": false})
    );

    let r = ok_result(&["classify", "--p", "3"], r#"{"vv":{"a":2,"b":1}}"#);
    assert_eq!(r["cover"]["orbit_size"], 2);
    assert_eq!(r["ramification"], json!(["a", "b"]));
    assert_eq!(r["cornalba"]["deg_l"], "1");
    assert_eq!(r["rotation"], json!({"a": 2, "b": 1}));
}

#[test]
fn ramification_profile() {
    let r = ok_result(&["ramification", "--p", "3"], r#"{"vv":{"a":1,"b":3}}"#);
    assert_eq!(
        r,
        json!({"locus": ["a"], "profile": {"a": 3}, "rational": false})
    );
}

#[test]
fn strata_sizes() {
    let r = ok_result(&["strata", "--p", "3", "--r-contained", "2"], "");
    assert_eq!(r["filtration"], "9");
    assert_eq!(r["stratum"], "4");
    assert_eq!(r["strata_by_support_size"], json!(["1", "4", "4"]));
}

const F9: &str = r#"{"q":3,"dim":2,"mul":[[[1,0],[0,1]],[[0,1],[2,0]]],"gen":[[1,0],[0,2]]}"#;
const SPLIT: &str = r#"{"q":3,"dim":2,"mul":[[[1,0],[0,1]],[[0,1],[1,0]]],"gen":[[1,0],[0,2]]}"#;
const NIL: &str = r#"{"q":3,"dim":2,"mul":[[[1,0],[0,1]],[[0,1],[0,0]]],"gen":[[1,0],[0,2]]}"#;

#[test]
fn ring_check() {
    let r = ok_result(&["ring-check", "--p", "2", "--q", "3"], F9);
    assert_eq!(r["galois"], true);
    assert_eq!(r["harrison_class"], 1);
    assert_eq!(r["kummer_unit"], 2);
    let r = ok_result(&["ring-check", "--p", "2"], SPLIT);
    assert_eq!(r["harrison_class"], 0);
    assert_eq!(r["condition_three"], true);
    let r = ok_result(&["ring-check", "--p", "2"], NIL);
    assert_eq!(r["galois"], false);
    assert_eq!(r["h_rank"], 3);
}

#[test]
fn ring_product() {
    let payload = format!(r#"{{"a":{F9},"b":{F9}}}"#);
    let r = ok_result(&["ring-product", "--p", "2", "--q", "3"], &payload);
    assert_eq!(r["galois"], true);
    assert_eq!(r["harrison_class"], 0);
    assert_eq!(r["product"]["dim"], 2);
}

#[test]
fn census_rows() {
    let r = ok_result(&["census", "--p", "2", "--g", "1", "--max-r", "2"], "");
    assert_eq!(r["rows"][0]["count_contained"], "3");
    assert_eq!(r["all_agree"], true);
    let r = ok_result(&["census", "--p", "2", "--g", "0", "--max-r", "2"], "");
    assert_eq!(r["rows"][2]["count_exact"], "1");
    assert_eq!(r["rows"][2]["oracle_exact"], "1");
    let r = ok_result(&["census", "--p", "3", "--g", "0", "--max-r", "1"], "");
    assert_eq!(r["rows"][1]["count_exact"], "0");
}

#[test]
fn census_budget_truncates_with_exit_three() {
    let (code, out, _) = coverkit(
        &["census", "--p", "5", "--g", "1", "--max-r", "6"],
        "",
        Some("10000"),
    );
    assert_eq!(code, 3);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["truncated_at"], 5);
    assert_eq!(v["result"]["rows"].as_array().unwrap().len(), 5);
}

#[test]
fn table_output() {
    let (code, out, _) = coverkit(
        &["census", "--p", "2", "--g", "0", "--max-r", "2", "--table"],
        "",
        None,
    );
    assert_eq!(code, 0);
    assert!(out.contains("r\tcount_contained\tcount_exact"));
    assert!(out.lines().any(|l| l == "2\t1\t1\t1\t1\ttrue"));
    let (_, out, _) = coverkit(&["count", "--p", "2", "--g", "1", "--table"], "", None);
    assert!(out.contains("count\t3"));
}

#[test]
fn errors_and_exit_codes() {
    let (code, out, err) = coverkit(&["bogus"], "", None);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("Usage"));

    let (code, out, _) = coverkit(&["exists", "--p", "4"], r#"{"vv":{}}"#, None);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "error");
    assert_eq!(v["result"]["code"], "not_prime");

    let (code, out, _) = coverkit(&["rotation", "--p", "5"], r#"{"exps":[2,2]}"#, None);
    assert_eq!(code, 2);
    assert!(out.contains("invalid_input"));

    let (code, _, _) = coverkit(&["ring-check", "--p", "2", "--q", "5"], F9, None);
    assert_eq!(code, 2);
}

#[test]
fn input_file() {
    let dir = std::env::temp_dir().join(format!("coverkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("payload.json");
    std::fs::write(&path, r#"{"exps":[3,4]}"#).unwrap();
    let r = ok_result(
        &["rotation", "--p", "7", "--input", path.to_str().unwrap()],
        "ignored",
    );
    assert_eq!(r, json!({"rotation": {"x1": 5, "x2": 2}}));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let runs: Vec<String> = (0..3)
        .map(|_| {
            coverkit(
                &["classify", "--p", "5", "--g", "1"],
                r#"{"vv":{"b":3,"a":2},"jac":[1,4]}"#,
                None,
            )
            .1
        })
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}
