use std::fs;
use std::process::{Command, Output};

use triptych::{BelyiMap, Catalog, Dessin, TriptychRecord};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triptych"))
        .args(args)
        .output()
        .unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

#[test]
fn construct_json_round_trips() {
    for args in [
        &["construct", "power", "--d", "4", "--format", "json"][..],
        &["construct", "chebyshev", "--d", "7", "--format", "json"],
        &["construct", "poly", "--d", "9", "--k", "4", "--format", "json"],
        &["construct", "symmetric", "--d", "11", "--k", "3", "--format", "json"],
    ] {
        let out = run(args);
        assert!(out.status.success(), "{args:?}");
        let rec: TriptychRecord = serde_json::from_slice(&out.stdout).unwrap();
        rec.validate().unwrap();
        assert_eq!(serde_json::to_string_pretty(&rec).unwrap() + "\n", text(&out.stdout));
    }
}

#[test]
fn power_map_dot_is_a_star() {
    let out = run(&["construct", "power", "--d", "4", "--format", "dot"]);
    let dot = text(&out.stdout);
    assert!(dot.starts_with("graph dessin {"));
    assert_eq!(dot.matches("fillcolor=black").count(), 1);
    assert_eq!(dot.matches("fillcolor=white").count(), 4);
    assert_eq!(dot.matches(" -- ").count(), 4);
    assert!(dot.lines().filter(|l| l.contains(" -- ")).all(|l| l.contains("b0 --")));
}

#[test]
fn out_of_range_parameters_exit_2() {
    for args in [
        &["construct", "poly", "--d", "5", "--k", "4"][..],
        &["construct", "poly", "--d", "2", "--k", "1"],
        &["construct", "symmetric", "--d", "6", "--k", "3"],
        &["construct", "poly", "--d", "5"],
        &["dessin", "2,2,2"],
        &["dessin", "6,2,3"],
        &["dessin", "3,3"],
        &["enumerate", "--dmax", "31", "--out", "/dev/null"],
        &["enumerate", "--dmax", "2", "--out", "/dev/null"],
        &["enumerate", "--dmax", "4", "--out", "/nonexistent/dir/x.jsonl"],
        &["verify", "/nonexistent.json"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", text(&out.stderr));
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn dessin_names_the_violated_constraint() {
    let err = text(&run(&["dessin", "2,2,2"]).stderr);
    assert!(err.contains("even"), "{err}");
    let out = run(&["dessin", "8,5,8", "--format", "json"]);
    let ds: Dessin = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(ds.edge_count(), 10);
}

#[test]
fn verify_accepts_records_maps_and_bare_functions() {
    let dir = tempfile::tempdir().unwrap();
    let record = dir.path().join("record.json");
    let map = dir.path().join("map.json");
    let bare = dir.path().join("bare.json");
    let out = run(&["construct", "symmetric", "--d", "10", "--k", "2", "--format", "json"]);
    fs::write(&record, &out.stdout).unwrap();
    let rec: TriptychRecord = serde_json::from_slice(&out.stdout).unwrap();
    let m: BelyiMap = rec.map.unwrap();
    fs::write(&map, serde_json::to_string(&m).unwrap()).unwrap();
    fs::write(&bare, serde_json::to_string(&m.f).unwrap()).unwrap();

    for path in [&record, &map] {
        let out = run(&["verify", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(text(&out.stdout).contains("isBelyi: true"));
    }
    let out = run(&["verify", bare.to_str().unwrap(), "--type", "8,5,8"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", bare.to_str().unwrap(), "--type", "5,8,8"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(text(&out.stdout).contains("e0 mismatch"));
}

#[test]
fn malformed_input_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let truncated = dir.path().join("t.json");
    fs::write(&truncated, "{\n  \"num\": [\"0\", \"1\"").unwrap();
    let out = run(&["verify", truncated.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("line 2"), "{}", text(&out.stderr));

    let zero_den = dir.path().join("z.json");
    fs::write(&zero_den, r#"{"num": ["1"], "den": ["0"]}"#).unwrap();
    assert_eq!(run(&["verify", zero_den.to_str().unwrap()]).status.code(), Some(2));

    let bad_type = dir.path().join("ok.json");
    fs::write(&bad_type, r#"{"num": ["0", "0", "1"]}"#).unwrap();
    assert_eq!(
        run(&["verify", bad_type.to_str().unwrap(), "--type", "2,x,2"]).status.code(),
        Some(2)
    );
}

#[test]
fn enumerate_writes_valid_jsonl_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cat.jsonl");
    let out = run(&["enumerate", "--dmax", "6", "--out", path.to_str().unwrap(), "--dedup"]);
    assert!(out.status.success());
    assert_eq!(
        text(&out.stdout).trim(),
        "40 records; d=3:3 d=4:7 d=5:12 d=6:18; collapsed 0"
    );
    let body = fs::read_to_string(&path).unwrap();
    let recs = Catalog::read_jsonl(&body).unwrap();
    assert_eq!(recs.len(), 40);
    for (line, rec) in body.lines().zip(&recs) {
        rec.validate().unwrap();
        assert_eq!(serde_json::to_string(rec).unwrap(), line);
    }
    let with_map = recs.iter().filter(|r| r.map.is_some()).count();
    let expected = recs
        .iter()
        .filter(|r| {
            let ct = r.ct.unwrap();
            ct.e_inf == ct.d || (ct.e0 == ct.e_inf && ct.e1 % 2 == 1)
        })
        .count();
    assert_eq!(with_map, expected);
}
