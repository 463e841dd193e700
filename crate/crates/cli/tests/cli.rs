use std::process::{Command, Output};

use rainbow_core::graph::{canonical_form, gen_cycle, parse_graph6};

fn rainbow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn invariants() {
    let out = rainbow(&["invariant", "P4", "--type", "rdk", "--k", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("value 3\n"));

    let out = rainbow(&["invariant", "K2", "--type", "gammat"]);
    assert!(stdout(&out).starts_with("value 2\n"));

    let out = rainbow(&["invariant", "double_c4", "--type", "gamma"]);
    assert!(stdout(&out).starts_with("value 3\n"));
}

#[test]
fn isolated_vertex_is_a_precondition_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.edges");
    std::fs::write(&path, "3 1\n0 1\n").unwrap();
    let out = rainbow(&["invariant", path.to_str().unwrap(), "--type", "gammat"]);
    assert_eq!(code(&out), 5);
}

#[test]
fn bad_input_exit_codes() {
    assert_eq!(code(&rainbow(&["invariant", "Q3", "--type", "gamma"])), 2);
    assert_eq!(code(&rainbow(&["invariant", "g6:~~", "--type", "gamma"])), 2);
    assert_eq!(code(&rainbow(&["construct", "tiles", "--n", "7", "--h", "K3"])), 5);
}

#[test]
fn products() {
    let p = |args: &[&str]| stdout(&rainbow(args)).trim().to_string();
    let cart = parse_graph6(&p(&["product", "P2", "P2", "--kind", "cart"])).unwrap();
    assert_eq!(canonical_form(&cart), canonical_form(&gen_cycle(4).unwrap()));
    assert_eq!(p(&["product", "P2", "P2", "--kind", "lex"]), "C~");
    assert_eq!(p(&["product", "K1", "P5"]), p(&["product", "P5", "K1", "--kind", "cart"]));
}

#[test]
fn certificates() {
    let first = |g: &str, h: &str| stdout(&rainbow(&["certify", g, h])).lines().next().unwrap_or("").to_string();
    assert_eq!(first("P7", "double_c4"), "exact 7, case RdH3NoPair");
    assert_eq!(first("P4", "K2"), "exact 4, case RdH2");
    assert_eq!(first("P5", "P4"), "interval [4,5]; refined exact 5, case RdH3Pair");
    let out = rainbow(&["certify", "P5", "P4", "--exact-budget", "0"]);
    assert!(stdout(&out).starts_with("interval [4,5], case RdH3Pair"));
}

#[test]
fn certificate_json_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("c.json");
    let lab = dir.path().join("w.lab");
    let out = rainbow(&["certify", "P7", "double_c4", "--json", json.to_str().unwrap(), "--witness", lab.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(value["lo"], 7);
    assert_eq!(value["hi"], 7);
    let out = rainbow(&["validate", lab.to_str().unwrap(), "P7", "--h", "double_c4"]);
    assert_eq!(stdout(&out).trim(), "ok weight 7");
}

#[test]
fn tiles_validate_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let lab = dir.path().join("t.lab");
    let out = rainbow(&["construct", "tiles", "--n", "7", "--h", "P4", "--out", lab.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "weight 6");
    let out = rainbow(&["validate", lab.to_str().unwrap(), "P7", "--h", "P4"]);
    assert_eq!((code(&out), stdout(&out).trim().to_string()), (0, "ok weight 6".to_string()));

    let text = std::fs::read_to_string(&lab).unwrap();
    let labelled = text.lines().find(|l| l.contains('{')).unwrap().to_string();
    let (vertex, _) = labelled.split_once(':').unwrap();
    std::fs::write(&lab, text.replacen(&labelled, &format!("{vertex}: -"), 1)).unwrap();
    let out = rainbow(&["validate", lab.to_str().unwrap(), "P7", "--h", "P4"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("violation at vertex"));
}

#[test]
fn other_constructions_validate() {
    for args in [
        &["construct", "couple", "--g", "P7", "--h", "double_c4"][..],
        &["construct", "totaldom", "--g", "P4", "--h", "P4"],
        &["construct", "glued", "--m", "1", "--p2", "1", "--h", "P4"],
    ] {
        let out = rainbow(args);
        assert_eq!(code(&out), 0, "{args:?}");
        assert!(stdout(&out).starts_with("# k 2 weight "));
    }
}

#[test]
fn enumeration() {
    let out = rainbow(&["enumerate", "--n", "4"]);
    assert_eq!(stdout(&out).lines().count(), 6);
    let out = rainbow(&["enumerate", "--rdfs", "K2"]);
    assert_eq!(stdout(&out).lines().count(), 6);
    assert_eq!(code(&rainbow(&["enumerate", "--rdfs", "K2", "--cap", "5"])), 4);
}

#[test]
fn verify_small_corpus() {
    let out = rainbow(&["verify", "--ng", "5", "--h", "C4", "--cap", "20"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).trim_end().ends_with("0 violations"));
}
