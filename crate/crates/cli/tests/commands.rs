use homshift::io::{parse_graph, whiskered_to_json, GraphInput};
use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use tempfile::TempDir;

fn homshift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homshift"))
        .args(args)
        .env_remove("HOMSHIFT_CAPS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn construct(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    let o = homshift(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    write(dir, name, &stdout(&o))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn generators(doc: &Value) -> Vec<Value> {
    doc["generators"].as_array().unwrap().clone()
}

#[test]
fn c4_has_two_covers() {
    let dir = TempDir::new().unwrap();
    let c4 = construct(&dir, "c4.json", &["cycle", "4"]);
    let o = homshift(&["covers", s(&c4), "--format", "json"]);
    assert!(o.status.success());
    let doc = json(&o);
    assert_eq!(doc["covers"], serde_json::json!([["x1", "x3"], ["x2", "x4"]]));
}

#[test]
fn k2_cover_ideal_is_the_maximal_ideal() {
    let dir = TempDir::new().unwrap();
    let k2 = write(&dir, "k2.json", r#"{"vertices": ["a", "b"], "edges": [["a", "b"]]}"#);
    let o = homshift(&["cover-ideal", s(&k2)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "<a, b>");
    let doc = json(&homshift(&["cover-ideal", s(&k2), "--format", "json"]));
    assert_eq!(generators(&doc), vec![serde_json::json!({"a": 1}), serde_json::json!({"b": 1})]);
}

#[test]
fn malformed_input_is_a_parse_error() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"vertices": ["a", "b"], "edges": [["a"#);
    let o = homshift(&["covers", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parsing graph"));

    let unknown = write(&dir, "unknown.json", r#"{"vertices": ["a"], "edges": [], "colour": 1}"#);
    assert_eq!(homshift(&["covers", s(&unknown)]).status.code(), Some(2));

    let loop_edge = write(&dir, "loop.json", r#"{"vertices": ["a"], "edges": [["a", "a"]]}"#);
    assert_eq!(homshift(&["cover-ideal", s(&loop_edge)]).status.code(), Some(2));
}

#[test]
fn hs_of_g2_agrees_on_both_routes() {
    let dir = TempDir::new().unwrap();
    let g2 = construct(&dir, "g2.json", &["whiskered-cycle", "2"]);
    let o = homshift(&["hs", s(&g2), "--k", "2", "--route", "both", "--format", "json"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let doc = json(&o);
    assert_eq!(doc["equal"], Value::Bool(true));
    // x1x2x3x4 * <y1y3, y2y4>
    let expected = vec![
        serde_json::json!({"x1": 1, "y1": 1, "x2": 1, "x3": 1, "y3": 1, "x4": 1}),
        serde_json::json!({"x1": 1, "x2": 1, "y2": 1, "x3": 1, "x4": 1, "y4": 1}),
    ];
    assert_eq!(generators(&doc["oracle"]), expected);
    assert_eq!(generators(&doc["linquot"]), expected);
}

#[test]
fn hs_zero_is_the_input_ideal() {
    let dir = TempDir::new().unwrap();
    let ideal = write(&dir, "i.json", r#"["x1x2", "x2x3", "x3x4"]"#);
    let o = homshift(&["hs", s(&ideal), "--k", "0", "--route", "both"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("HS_0 = <x1x2, x2x3, x3x4>"));
}

#[test]
fn oracle_route_honours_caps() {
    let dir = TempDir::new().unwrap();
    let g3 = construct(&dir, "g3.json", &["whiskered-cycle", "3"]);
    // J(G_3) has 18 generators
    let o = homshift(&["hs", s(&g3), "--k", "3", "--route", "oracle", "--max-generators", "17"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("generator cap exceeded: 18 > 17"));

    let o = Command::new(env!("CARGO_BIN_EXE_homshift"))
        .args(["hs", s(&g3), "--k", "3", "--route", "oracle"])
        .env("HOMSHIFT_CAPS", "max_lattice=100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("lcm lattice cap exceeded"));

    // the linear-quotient route is not bound by the oracle caps
    let o = homshift(&["hs", s(&g3), "--k", "3", "--route", "linquot", "--max-generators", "17"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "<x1y1x2x3y3x4x5y5x6, x1x2y2x3x4y4x5x6y6>");
}

#[test]
fn bad_caps_are_rejected() {
    let dir = TempDir::new().unwrap();
    let c4 = construct(&dir, "c4.json", &["cycle", "4"]);
    let o = Command::new(env!("CARGO_BIN_EXE_homshift"))
        .args(["covers", s(&c4)])
        .env("HOMSHIFT_CAPS", "max_colours=3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(homshift(&["covers", s(&c4), "--max-vertices", "0"]).status.code(), Some(2));
    assert_eq!(homshift(&["covers", s(&c4), "--max-vertices", "3"]).status.code(), Some(2));
}

#[test]
fn counterexample_two_passes() {
    let o = homshift(&["counterexample", "2", "--format", "json"]);
    assert!(o.status.success());
    let doc = json(&o);
    let checks = doc["checks"].as_array().unwrap();
    assert!(checks.len() >= 6);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn construct_round_trips() {
    let dir = TempDir::new().unwrap();
    let g2 = construct(&dir, "g2.json", &["whiskered-cycle", "2"]);
    let text = std::fs::read_to_string(&g2).unwrap();
    let GraphInput::Whiskered(parsed) = parse_graph(&text).unwrap() else {
        panic!("roles were dropped");
    };
    assert_eq!(parsed.graph().len(), 8);
    assert_eq!(parsed.graph().num_edges(), 8);
    let again: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(whiskered_to_json(&parsed), again);

    let path = construct(&dir, "p3.json", &["path", "3"]);
    let partition = write(&dir, "part.json", r#"{"cliques": [["x1", "x2"], ["x3"]]}"#);
    let cw = construct(
        &dir,
        "cw.json",
        &["clique-whisker", s(&path), "--partition", s(&partition)],
    );
    let GraphInput::Whiskered(w) = parse_graph(&std::fs::read_to_string(cw).unwrap()).unwrap() else {
        panic!("roles were dropped");
    };
    assert_eq!(w.graph().len(), 5);
}

#[test]
fn check_reports_pass_and_shape_errors() {
    let dir = TempDir::new().unwrap();
    let g2 = construct(&dir, "g2.json", &["whiskered-cycle", "2"]);
    let o = homshift(&["check", s(&g2), "--mode", "generic"]);
    assert!(o.status.success(), "{}", stdout(&o));

    // C_4 is not chordal
    let o = homshift(&["check", s(&g2), "--mode", "chordal"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("chordal"));

    let o = homshift(&["check", s(&g2), "--mode", "clique-corona"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(homshift(&["check", s(&g2), "--mode", "planar"]).status.code(), Some(2));
}

#[test]
fn corpus_check_is_deterministic() {
    let a = homshift(&["check", "--corpus", "--count", "8", "--seed", "7", "--format", "json", "--jobs", "1"]);
    let b = homshift(&["check", "--corpus", "--count", "8", "--seed", "7", "--format", "json"]);
    assert!(a.status.success() && b.status.success());
    let strip = |mut v: Value| {
        for r in v["reports"].as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("millis");
            for c in r["checks"].as_array_mut().unwrap() {
                c.as_object_mut().unwrap().remove("millis");
            }
        }
        v
    };
    let (a, b) = (strip(json(&a)), strip(json(&b)));
    assert_eq!(a, b);
    assert_eq!(a["reports"].as_array().unwrap().len(), 8);
    assert_eq!(a["reports"][0]["seed"], 7);
}

#[test]
fn find_lq_and_wpm_exit_codes() {
    let dir = TempDir::new().unwrap();
    let g2 = construct(&dir, "g2.json", &["whiskered-cycle", "2"]);
    let hs = homshift(&["hs", s(&g2), "--k", "2", "--format", "json"]);
    let hs2 = write(&dir, "hs2.json", &stdout(&hs));

    assert_eq!(homshift(&["find-lq", s(&hs2)]).status.code(), Some(1));
    let o = homshift(&["find-lq", s(&g2), "--format", "json"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["found"], Value::Bool(true));

    assert_eq!(homshift(&["check-wpm", s(&hs2)]).status.code(), Some(1));
    assert_eq!(homshift(&["check-wpm", s(&g2), "--k", "2"]).status.code(), Some(1));
    assert_eq!(homshift(&["check-wpm", s(&g2), "--k", "1"]).status.code(), Some(1));
    let o = homshift(&["check-wpm", s(&g2), "--k", "1", "--search", "--format", "json"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["weakly_polymatroidal"], Value::Bool(true));

    let c4 = construct(&dir, "c4.json", &["cycle", "4"]);
    assert_eq!(homshift(&["find-lq", s(&c4), "--order", "x2x4,x1x3"]).status.code(), Some(1));
    let k2 = write(&dir, "k2.json", r#"{"vertices": ["a", "b"], "edges": [["a", "b"]]}"#);
    assert!(homshift(&["find-lq", s(&k2), "--order", "a,b"]).status.success());
    assert_eq!(homshift(&["find-lq", s(&k2), "--order", "a"]).status.code(), Some(2));
}

#[test]
fn betti_csv() {
    let dir = TempDir::new().unwrap();
    let c4 = construct(&dir, "c4.json", &["cycle", "4"]);
    let o = homshift(&["betti", s(&c4), "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "k,degree,multidegree,beta\n0,2,x1x3,1\n0,2,x2x4,1\n1,4,x1x2x3x4,1\n"
    );
    assert_eq!(homshift(&["hs", s(&c4), "--k", "1", "--format", "csv"]).status.code(), Some(2));
}

#[test]
fn g3_fits_the_default_caps() {
    let dir = TempDir::new().unwrap();
    let g3 = construct(&dir, "g3.json", &["whiskered-cycle", "3"]);
    let o = homshift(&["hs", s(&g3), "--k", "3", "--route", "both", "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["equal"], Value::Bool(true));
}
