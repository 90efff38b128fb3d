use std::process::{Command, Output};

use serde_json::Value;

fn qtforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtforge")).args(args).output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn pnp_char_two_one() {
    let o = qtforge(&["compute", "pnp-char", "--mu", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let terms: Vec<(String, String, String)> = json(&o)
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["q"].as_str().unwrap().into(), t["t"].as_str().unwrap().into(), t["c"].as_str().unwrap().into()))
        .collect();
    let want = [("1", "1", "1"), ("1", "0", "2"), ("0", "1", "2"), ("0", "0", "1")];
    assert_eq!(terms, want.map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string())));
}

#[test]
fn pnp_char_of_one_box_is_one() {
    let o = qtforge(&["compute", "pnp-char", "--mu", "1"]);
    assert_eq!(json(&o), serde_json::json!([{ "q": "0", "t": "0", "c": "1" }]));
}

#[test]
fn kappa_value() {
    let o = qtforge(&["compute", "kappa", "--k", "1", "--lambda", "2"]);
    assert_eq!(json(&o), Value::String("0".into()));
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "gh-equivalence", "--n", "5"][..],
        &["verify", "thm-identities", "--n", "3"][..],
        &["verify", "--name", "thm-identities", "--n", "3"][..],
        &["verify", "merge-lemma", "--n", "4"][..],
    ] {
        let o = qtforge(args);
        assert_eq!(o.status.code(), Some(0), "{:?}", args);
        let r = json(&o);
        assert_eq!(r["passed"], r["total"]);
        assert!(r["counterexample"].is_null());
        assert!(r.get("wall_ms").is_none());
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "no-such-target"][..],
        &["compute", "pnp-char", "--mu", "1,2"][..],
        &["compute", "pnp-char", "--mu", "a"][..],
        &["compute", "pnp-char"][..],
        &["verify", "no-such-suite"][..],
        &["frobnicate"][..],
        &["compute", "g-poly", "--k", "1/0", "--lambda", "1", "--nu", "1"][..],
    ] {
        let o = qtforge(args);
        assert_eq!(o.status.code(), Some(2), "{:?}", args);
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["compute", "kostka-macdonald", "--mu", "2,1,1"];
    let a = qtforge(&args);
    let b = qtforge(&args);
    assert_eq!(a.stdout, b.stdout);
    let a = qtforge(&["verify", "gordon", "--n", "3"]);
    let b = Command::new(env!("CARGO_BIN_EXE_qtforge"))
        .args(["verify", "gordon", "--n", "3"])
        .env("QTFORGE_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn timing_is_opt_in() {
    let r = json(&qtforge(&["verify", "pnp-examples", "--timing"]));
    assert!(r["wall_ms"].is_u64());
}

#[test]
fn g_poly_and_b_coeff_parse() {
    let o = qtforge(&["compute", "g-poly", "--k", "1/2", "--n", "2", "--lambda", "2", "--nu", "2,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["num"].is_array());
    let o = qtforge(&["compute", "b-coeff", "--mu", "1,1", "--lambda", "2,1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    // n disagrees with |λ|
    let o = qtforge(&["compute", "b-coeff", "--mu", "1", "--lambda", "2,1", "--n", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn chi_r_routes_agree_on_the_command_line() {
    let a = qtforge(&["compute", "chi-r", "--n", "2", "--deg", "4", "--route", "thm"]);
    let b = qtforge(&["compute", "chi-r", "--n", "2", "--deg", "4", "--route", "ab"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn tables_in_both_formats() {
    let o = qtforge(&["table", "kostka-macdonald", "--n", "3", "--format", "csv"]);
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("lambda\\mu,(3)"));
    assert!(lines[1].starts_with("(3),1,1,1"));
    let r = json(&qtforge(&["table", "sn-characters", "--n", "4"]));
    assert_eq!(r["chi"].as_array().unwrap().len(), 5);
    let r = json(&qtforge(&["table", "fake-degree", "--n", "3"]));
    assert_eq!(r["entries"].as_array().unwrap().len(), 3);
}

#[test]
fn csv_of_a_polynomial() {
    let o = qtforge(&["--format", "csv", "compute", "pnp-char", "--mu", "2"]);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "c,q,t\n1,1,0\n1,0,0\n");
}

#[test]
fn explore_emits_graph() {
    let dir = std::env::temp_dir().join(format!("qtforge-graph-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.json");
    let o = qtforge(&["explore", "degenerations", "--mu", "2,2", "--emit-graph", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let summary = json(&o);
    assert_eq!(summary["nodes"], 10);
    assert_eq!(summary["connected"], true);
    let g: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g["nodes"].as_array().unwrap().len(), 10);
    assert_eq!(g["edges"].as_array().unwrap().len(), summary["edges"].as_u64().unwrap() as usize);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn report_shape() {
    let r = json(&qtforge(&["verify", "gh-lemmas", "--n", "3"]));
    assert_eq!(r["name"], "gh-lemmas");
    assert!(r["range"].is_string());
    assert_eq!(r["instances"].as_array().unwrap().len(), 7);
}
