mod common;

use std::fs;

use serde_json::Value;

use common::{fixture, fixtures, run, Case};

fn args(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn json_of(out: &std::process::Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn validate(case: &Case, doc: &Value) {
    let path = common::schema_dir().join(format!("{}.json", case.schema));
    let schema: Value = serde_json::from_str(&fs::read_to_string(&path).expect("schema file"))
        .expect("schema JSON");
    let validator = jsonschema::validator_for(&schema).expect("valid schema");
    let errors: Vec<String> = validator
        .iter_errors(doc)
        .map(|e| format!("{} at {}", e, e.instance_path))
        .collect();
    assert!(errors.is_empty(), "{}: {errors:#?}", case.name);
}

#[test]
fn every_command_validates_against_its_schema() {
    for case in common::matrix() {
        let out = run(&case.args);
        assert!(
            out.status.success(),
            "{}: {}",
            case.name,
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(
            !out.stderr.is_empty(),
            "{}: no summary on stderr",
            case.name
        );
        let doc = json_of(&out);
        assert_eq!(doc["schema_version"], 1);
        validate(&case, &doc);
    }
}

#[test]
fn schemas_cover_the_matrix() {
    let mut used: Vec<&str> = common::matrix().iter().map(|c| c.schema).collect();
    used.sort();
    used.dedup();
    let mut shipped: Vec<String> = fs::read_dir(common::schema_dir())
        .unwrap()
        .map(|e| {
            e.unwrap()
                .file_name()
                .to_string_lossy()
                .trim_end_matches(".json")
                .to_string()
        })
        .collect();
    shipped.sort();
    assert_eq!(used, shipped);
}

#[test]
fn detect_examples() {
    let out = run(&args(&[
        "detect",
        "--input",
        &fixture("blowup2.txt"),
        "--kind",
        "tournament",
        "--t",
        "2",
    ]));
    let doc = json_of(&out);
    assert_eq!(doc["found"], true);
    assert_eq!(doc["witness"]["kind"], "cyclic-blowup");
    let out = run(&args(&[
        "detect",
        "--input",
        &fixture("transitive8.txt"),
        "--kind",
        "tournament",
        "--t",
        "2",
    ]));
    assert_eq!(json_of(&out)["found"], false);
    assert!(json_of(&out).get("witness").is_none());
}

#[test]
fn malformed_input_names_the_line() {
    let path = fixtures().join("malformed.txt");
    fs::write(&path, "tournament 3\n0 1\n# comment\n1 two\n2 0\n").unwrap();
    let out = run(&args(&[
        "detect",
        "--input",
        path.to_str().unwrap(),
        "--kind",
        "tournament",
        "--t",
        "1",
    ]));
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn kind_mismatch_and_missing_file_exit_2() {
    let out = run(&args(&[
        "detect",
        "--input",
        &fixture("star8.txt"),
        "--kind",
        "tournament",
        "--t",
        "2",
    ]));
    assert_eq!(out.status.code(), Some(2));
    let out = run(&args(&["farness", "--input", "/nonexistent/file.txt"]));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = run(&args(&[
        "detect",
        "--input",
        &fixture("transitive8.txt"),
        "--kind",
        "tournament",
        "--t",
        "2",
        "--budget",
        "1",
    ]));
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn farness_examples_and_cap() {
    let doc = json_of(&run(&args(&[
        "farness",
        "--input",
        &fixture("c3.txt"),
        "--exact",
    ])));
    assert_eq!(doc["numerator"], 1);
    assert_eq!(doc["delta"], "1/9");
    let path = fixtures().join("transitive50.txt");
    fs::write(
        &path,
        unavoid::io::encode_tournament(&unavoid::generate::transitive_tournament(50)),
    )
    .unwrap();
    let doc = json_of(&run(&args(&[
        "farness",
        "--input",
        path.to_str().unwrap(),
        "--heuristic",
    ])));
    assert_eq!(doc["numerator"], 0);
    assert_eq!(doc["kind"], "heuristic-upper-bound");
    let path = fixtures().join("random23.txt");
    fs::write(
        &path,
        unavoid::io::encode_tournament(&unavoid::generate::random_tournament(23, 1)),
    )
    .unwrap();
    let out = run(&args(&[
        "farness",
        "--input",
        path.to_str().unwrap(),
        "--exact",
    ]));
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn construct_examples() {
    let doc = json_of(&run(&args(&["construct", "d2rec", "--depth", "1"])));
    assert_eq!(doc["n"], 7);
    assert_eq!(doc["fas_exact"], 5);
    assert_eq!(doc["u2_free"], true);
    let doc = json_of(&run(&args(&[
        "construct",
        "zarankiewicz",
        "--n",
        "7",
        "--a",
        "2",
        "--b",
        "2",
    ])));
    assert_eq!(doc["edge_count"], 9);
    assert_eq!(doc["exhaustive"], true);
}

#[test]
fn construct_output_file_round_trips() {
    let path = fixtures().join("star-out.txt");
    let out = run(&args(&[
        "construct",
        "star",
        "--n",
        "9",
        "--output",
        path.to_str().unwrap(),
    ]));
    let doc = json_of(&out);
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(doc["instance"], text.as_str());
    let c = unavoid::io::decode_colouring(&text).unwrap();
    assert_eq!(c.red_count(), 8);
}

#[test]
fn failed_verification_exits_5() {
    // Vertex 0 of A has two neighbours, so H contains K_{1,2} and the
    // t = 2 verifier rejects it.
    let path = fixtures().join("bad-h.txt");
    fs::write(&path, "bipartite 3 3\n0 0\n0 1\n1 1\n").unwrap();
    let out = run(&args(&[
        "construct",
        "tourtight",
        "--input",
        path.to_str().unwrap(),
        "--t",
        "2",
    ]));
    assert_eq!(out.status.code(), Some(5));
    assert_eq!(json_of(&out)["passed"], false);
}

#[test]
fn ramsey_exact_writes_witnesses() {
    let dir = fixtures().join("ramsey-d");
    let out = run(&args(&[
        "ramsey",
        "exact",
        "--kind",
        "D",
        "--t",
        "2",
        "--n",
        "6",
        "--witness-dir",
        dir.to_str().unwrap(),
    ]));
    let doc = json_of(&out);
    let row = &doc["rows"][0];
    assert_eq!(row["n"], 6);
    let path = row["witness_path"].as_str().unwrap();
    let stored = fs::read_to_string(path).unwrap();
    assert_eq!(row["witness"], stored.as_str());
    let tour = unavoid::io::decode_tournament(&stored).unwrap();
    let fas = unavoid::farness::min_backward_edges_exact(&tour)
        .unwrap()
        .numerator;
    assert_eq!(row["m_star"], fas);
}

#[test]
fn schemas_reject_unexpected_documents() {
    let schema: Value = serde_json::from_str(
        &fs::read_to_string(common::schema_dir().join("farness.json")).unwrap(),
    )
    .unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let doc = json_of(&run(&args(&["farness", "--input", &fixture("c3.txt")])));
    assert!(validator.is_valid(&doc));
    let mut extra = doc.clone();
    extra["surprise"] = Value::Bool(true);
    assert!(!validator.is_valid(&extra));
    let mut wrong = doc;
    wrong["delta"] = Value::from(0.111);
    assert!(!validator.is_valid(&wrong));
}
