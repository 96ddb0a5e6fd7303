use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn cellgeom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cellgeom")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).expect("schema file")).expect("schema json")
}

/// Runs with `--json`, checks the exit code and validates against the schema.
fn json_output(args: &[&str], schema_name: &str, code: i32) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = cellgeom(&all);
    assert_eq!(o.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).expect("json output");
    let validator = jsonschema::validator_for(&schema(schema_name)).expect("valid schema");
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?}: {errors:?}");
    v
}

#[test]
fn rsk_prints_the_gl12_tableaux() {
    let o = cellgeom(&["rsk", "438721a965cb"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "P =\n1 5 9 b\n2 6 a c\n3 7\n4 8\nQ =\n1 3 7 b\n2 4 8 c\n5 9\n6 a\n");
    let v = json_output(&["rsk", "4387a2c691b5"], "rsk", 0);
    assert_eq!(v["Q"][3], serde_json::json!([10, 12]));
}

#[test]
fn slice_example_has_one_determinant() {
    let o = cellgeom(&["slice", "--n", "4", "--x", "2143", "--y", "4231", "--essential"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("conditions (1):"), "{text}");
    assert!(text.contains("g31*g42 - g32*g41 = 0"), "{text}");
    let v = json_output(&["slice", "--n", "4", "--x", "2143", "--y", "4231", "--essential"], "slice", 0);
    assert_eq!(v["conditions"].as_array().unwrap().len(), 1);
    assert_eq!(v["variables"], serde_json::json!(["g31", "g41", "g32", "g42"]));
    json_output(&["slice", "--n", "4", "--x", "2143", "--y", "4231"], "slice", 0);
}

#[test]
fn slice_warns_when_not_below() {
    let o = cellgeom(&["slice", "--n", "3", "--x", "321", "--y", "123", "--essential"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn kl_rows_validate() {
    let v = json_output(&["kl", "--n", "4"], "kl", 0);
    let rows = v.as_array().unwrap();
    assert!(rows.iter().any(|r| r["x"] == "1324" && r["w"] == "3412" && r["h"] == serde_json::json!([[1, 1], [3, 1]])));
    let v = json_output(&["kl", "--family", "B", "--n", "2", "--pair", "-12,-2-1"], "kl", 0);
    assert_eq!(v[0]["h"], serde_json::json!([[2, 1]]));
}

#[test]
fn cells_and_wgraph_validate() {
    let v = json_output(&["cells", "--n", "4"], "cells", 0);
    assert_eq!(v["cells"].as_array().unwrap().len(), 10);
    let v = json_output(&["cells", "--n", "4", "--kind", "two-sided"], "cells", 0);
    assert_eq!(v["cells"].as_array().unwrap().len(), 5);
    let v = json_output(&["wgraph", "--cell", "2134"], "wgraph", 0);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
    json_output(&["wgraph", "--family", "B", "--n", "2", "--cell", "-12"], "wgraph", 0);
}

#[test]
fn posbasis_validates() {
    let v = json_output(&["posbasis", "--family", "B", "--n", "2", "--cell", "-12"], "posbasis", 0);
    assert_eq!(v[0]["count"], 2);
    let v = json_output(&["posbasis", "--n", "4", "--partition", "3,1"], "posbasis", 0);
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["contains_w_lambda"], true);
}

#[test]
fn ks_commands_validate() {
    let v = json_output(&["ks", "verify", "--target", "gl8", "--samples", "5", "--seed", "3"], "ks-verify", 0);
    assert_eq!(v["inclusion_pass"], 5);
    assert_eq!(v["tangent_dims"]["slice"]["8"], 5);
    json_output(&["ks", "verify", "--target", "gl12", "--samples", "0", "--reduce-samples", "0"], "ks-verify", 0);
    let v = json_output(&["ks", "reduce", "--kind", "rank23", "--samples", "50"], "ks-reduce", 0);
    assert_eq!(v[0]["pass"], true);
}

#[test]
fn repro_subset_and_schema() {
    let v = json_output(&["repro", "all", "--only", "gl12", "--samples", "5"], "repro", 0);
    let records = v["records"].as_array().unwrap();
    assert!(records.iter().all(|r| r["id"].as_str().unwrap().starts_with("gl12.")));
    assert_eq!(v["failed"], 0);
    // The S4 count for (2,1,1) is not reproduced, so the group reports a failure.
    let v = json_output(&["repro", "all", "--only", "s4"], "repro", 1);
    assert_eq!(v["failed"], 1);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["rsk", "12x"][..],
        &["frobnicate"],
        &["ks", "verify", "--target", "gl9"],
        &["posbasis", "--n", "4", "--partition", "3,2"],
        &["repro", "some"],
        &["repro", "all", "--only", "nothing"],
    ] {
        assert_eq!(cellgeom(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn thread_cap_does_not_change_results() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_cellgeom"))
            .args(["ks", "verify", "--target", "gl8", "--samples", "8", "--json"])
            .env("CELLGEOM_THREADS", threads)
            .output()
            .expect("binary runs")
    };
    let (one, four) = (run("1"), run("4"));
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(run("zero").status.code(), Some(2));
}
