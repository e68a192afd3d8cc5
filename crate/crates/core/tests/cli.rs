mod support;

use lawvere::formal::{formula_of, goedel_number, parse_formula, NamedSentence};
use lawvere::universe::{eval, parse_program, Outcome, ProgramIndex};
use serde_json::Value;
use support::*;

fn json(out: &std::process::Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("lawvere-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn golden_reports() {
    for case in golden_cases() {
        if let Err(e) = check_golden(&case) {
            panic!("{}: {e}", case.name);
        }
    }
}

#[test]
fn diagonal_on_grelling_finds_the_heterological_words() {
    let out = run_cli(&["diagonal", "--input", &data("grelling.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verified"], true);
    let preimages = v["certificate"]["preimages"].as_array().unwrap();
    let het = preimages.iter().find(|p| p["value"] == "1").unwrap();
    assert_eq!(het["rows"], serde_json::json!(["french", "short"]));
    assert_eq!(
        v["certificate"]["representing_columns"],
        serde_json::json!([])
    );
}

#[test]
fn diagonal_with_a_section() {
    let out = run_cli(&[
        "diagonal",
        "--input",
        &data("section_demo.json"),
        "--section",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["certificate"]["construction"], "section");
    assert_eq!(v["certificate"]["g"], serde_json::json!(["1", "1", "0"]));
    let rows: Vec<&str> = v["certificate"]["witness"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w["row"].as_str().unwrap())
        .collect();
    assert_eq!(rows, ["t0", "t1"]);
}

#[test]
fn identity_alpha_is_not_applicable() {
    let path = temp_file(
        "identity.json",
        r#"{"y_labels":["0","1"],"t_labels":["a","b"],"s_labels":["a","b"],
            "alpha":[0,1],"f":[[0,0],[0,0]]}"#,
    );
    let out = run_cli(&["diagonal", "--input", &path]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["verified"], false);
    assert_eq!(
        v["certificate"]["fixed_points"],
        serde_json::json!(["0", "1"])
    );
    assert_eq!(
        v["certificate"]["diagonal_fixed_point"]["representing_column"],
        "a"
    );
}

#[test]
fn malformed_inputs_exit_2_and_name_the_problem() {
    let path = temp_file(
        "bad.json",
        r#"{"y_labels":["0","1"],"t_labels":["a"],"s_labels":["a"],"alpha":[1,0],"f":[[5]]}"#,
    );
    let out = run_cli(&["diagonal", "--input", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("field `f`"));

    let out = run_cli(&["diagonal", "--input", &data("grelling.json"), "--section"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run_cli(&["formal", "curry", "--a", "(imp (P 0) (Bogus 1))"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("Bogus") && err.contains("column 13"), "{err}");

    assert_eq!(
        run_cli(&["universe", "rice", "--decider", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run_cli(&["universe", "halt-matrix", "--n", "0", "--fuel", "5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn quine_report_reverifies() {
    let out = run_cli(&["universe", "quine"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let index: num_bigint::BigUint = v["certificate"]["quine"]["index"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    let body = parse_program(v["certificate"]["quine"]["body"].as_str().unwrap()).unwrap();
    assert_eq!(lawvere::universe::encode(&body), index);
    let q = ProgramIndex(index.clone());
    assert_eq!(
        eval(&q, std::slice::from_ref(&index), 1_000_000),
        Outcome::Value(index)
    );
}

#[test]
fn formal_reports_reverify() {
    for (kind, args) in [
        (
            NamedSentence::Goedel,
            vec!["formal", "goedel", "--print-number"],
        ),
        (
            NamedSentence::Rosser,
            vec!["formal", "rosser", "--print-number"],
        ),
        (
            NamedSentence::Parikh(n(100)),
            vec!["formal", "parikh", "--n", "100", "--print-number"],
        ),
    ] {
        let out = run_cli(&args);
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out);
        let cert = &v["certificate"];
        let text = |k: &str| cert[k].as_str().unwrap().to_string();
        let e = parse_formula(&text("e")).unwrap();
        assert_eq!(e, kind.formula().unwrap());
        let c = parse_formula(&text("c")).unwrap();
        let c_number: num_bigint::BigUint = text("c_number").parse().unwrap();
        assert_eq!(goedel_number(&c), c_number);
        assert_eq!(formula_of(&c_number), c);
        let reduced = parse_formula(&text("reduced")).unwrap();
        assert_eq!(lawvere::formal::reduce_diag(&c).unwrap(), reduced);
        assert_eq!(text("reduced"), text("target"));
    }
}

#[test]
fn curry_report_shows_one_unquote_step() {
    let out = run_cli(&["formal", "curry", "--a", "(forall y (P y))"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let c = v["certificate"]["c"].as_str().unwrap();
    assert_eq!(
        v["certificate"]["unquoted"].as_str().unwrap(),
        format!("(imp {c} (forall y (P y)))")
    );
}

#[test]
fn divergence_always_carries_its_fuel() {
    let out = run_cli(&[
        "universe",
        "refute-halt",
        "--candidate",
        "11",
        "--fuel",
        "500",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let r = &v["certificate"]["refutation"];
    assert_eq!(r["g_run"]["undefined"], "diverged");
    assert_eq!(r["g_fuel"], 507);
    assert_eq!(r["verdict"]["said_halt_but_diverged"]["fuel"], 507);
}
