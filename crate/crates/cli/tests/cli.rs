use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn malcev(args: &[&str]) -> (i32, Value, String) {
    let out: Output = Command::new(env!("CARGO_BIN_EXE_malcev")).args(args).output().expect("run malcev");
    let json: Value = serde_json::from_slice(&out.stdout).expect("JSON on stdout");
    (out.status.code().expect("exit code"), json, String::from_utf8_lossy(&out.stderr).into_owned())
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn write(name: &str, text: &str) -> String {
    let p = tmp(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn without_duration(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("duration_ms");
    v
}

#[test]
fn bad_table_gets_a_latin_square_diagnostic() {
    let f = write("bad_table.json", r#"{"order":3,"labels":["a","b","c"],"table":[[0,1,2],[1,1,0],[2,0,1]]}"#);
    let (code, r, err) = malcev(&["loop", "check", "--file", &f]);
    assert_eq!(code, 1);
    assert_eq!(r["status"], "fail");
    let w = r["records"][0]["failures"][0].as_str().unwrap();
    assert!(w.contains("row 1 repeats entry 1"), "{w}");
    assert!(err.contains("loop-axioms"));
}

#[test]
fn good_table_passes() {
    let f = write("c3.json", r#"{"order":3,"labels":["e","a","b"],"table":[[0,1,2],[1,2,0],[2,0,1]]}"#);
    let (code, r, _) = malcev(&["loop", "check", "--file", &f]);
    assert_eq!(code, 0);
    assert_eq!(r["facts"]["is_group"], true);
}

#[test]
fn o0_moufang_hopf_at_degree_three() {
    let (code, r, _) = malcev(&["verify", "moufang-hopf", "--algebra", "o0", "--max-deg", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "pass");
    assert_eq!(r["truncation"]["degree"], 3);
    let names: Vec<&str> = r["records"].as_array().unwrap().iter().map(|x| x["identity"].as_str().unwrap()).collect();
    assert_eq!(names, ["moufang-hopf-left", "moufang-hopf-right", "nalt"]);
    for rec in r["records"].as_array().unwrap() {
        assert!(!rec["anchor"].as_str().unwrap().is_empty());
    }
}

#[test]
fn verify_all_sl2() {
    let (code, r, _) = malcev(&["verify", "all", "--algebra", "sl2"]);
    assert_eq!(code, 0, "{r}");
    assert!(r["records"].as_array().unwrap().len() > 100);
}

#[test]
fn exit_codes_are_distinct() {
    assert_eq!(malcev(&["malcev", "check", "--algebra", "g2"]).0, 2);
    assert_eq!(malcev(&["smash", "build", "--algebra", "o0", "--module", "m2"]).0, 2);
    let bad = write("broken.json", "{\"order\": 2,");
    let (code, r, _) = malcev(&["loop", "check", "--file", &bad]);
    assert_eq!(code, 3);
    assert_eq!(r["error"]["kind"], "malformed-json");
    let (code, r, _) = malcev(&["envelope", "rs", "--z", "e*f*h", "--w", "e", "--degree", "3"]);
    assert_eq!(code, 4);
    assert_eq!(r["error"]["kind"], "budget");
}

#[test]
fn non_malcev_file_fails_the_identity() {
    let f = write(
        "nm.json",
        r#"{"dim":3,"labels":["e1","e2","e3"],"brackets":[
            {"i":0,"j":1,"coeffs":{"0":1}},{"i":1,"j":2,"coeffs":{"2":1}},{"i":0,"j":2,"coeffs":{"1":1,"2":1}}]}"#,
    );
    let (code, r, _) = malcev(&["malcev", "check", "--file", &f]);
    assert_eq!(code, 1);
    assert_eq!(r["records"][0]["identity"], "malcev-identity");
    assert!(r["records"][0]["failure_count"].as_u64().unwrap() > 0);
}

#[test]
fn reports_are_deterministic() {
    let args = ["loop", "from-reps", "--group", "s3", "--v", "deleted", "--w", "trivial", "--p", "5"];
    let (c1, a, _) = malcev(&args);
    let (c2, b, _) = malcev(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(without_duration(a), without_duration(b));
}

#[test]
fn action_data_round_trips_through_files() {
    let (t1, act) = (tmp("s3_table.json"), tmp("s3_action.json"));
    let (t1s, acts) = (t1.display().to_string(), act.display().to_string());
    let (code, r, _) = malcev(&["loop", "from-reps", "--v", "sign", "--w", "sign", "--p", "3", "--table-out", &t1s, "--action-out", &acts]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["facts"]["order"], 18);
    let t2 = tmp("s3_table_again.json").display().to_string();
    let (code, _, _) = malcev(&["loop", "extend", "--file", &acts, "--table-out", &t2]);
    assert_eq!(code, 0);
    assert_eq!(fs::read_to_string(&t1).unwrap(), fs::read_to_string(&t2).unwrap());
    assert_eq!(malcev(&["loop", "check", "--file", &t1s]).0, 0);
}

#[test]
fn loop_subcommands() {
    let (code, r, _) = malcev(&["loop", "doro", "--fixture", "s3-standard-f5"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(malcev(&["loop", "autotopism", "--group", "s3"]).0, 0);
    let (code, r, _) = malcev(&["loop", "nuclei", "--group", "c4"]);
    assert_eq!(code, 0);
    assert_eq!(r["facts"]["na"].as_array().unwrap().len(), 4);
    // order 5, only the identity is a Moufang element
    let f = write(
        "l5.json",
        r#"{"order":5,"labels":["0","1","2","3","4"],"table":[[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]}"#,
    );
    let (code, r, _) = malcev(&["loop", "moufang", "--file", &f]);
    assert_eq!(code, 0);
    assert_eq!(r["facts"]["moufang_elements"], serde_json::json!(["0"]));
    let (code, r, _) = malcev(&["loop", "moufang", "--file", &f, "--subset", "0,1"]);
    assert_eq!(code, 1);
    assert!(r["records"][0]["failures"][0].as_str().unwrap().starts_with("a=1"));
    assert_eq!(malcev(&["loop", "doro", "--file", &f, "--subset", "1"]).0, 1);
}

#[test]
fn smash_and_algebra_commands() {
    let (code, r, _) = malcev(&["smash", "verify", "nalt", "--algebra", "sl2", "--module", "m2", "--deg-env", "3", "--deg-v", "2"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["facts"]["smash"]["basis_size"], 120);
    let (code, r, _) = malcev(&["lie", "build-envelope", "--algebra", "o0"]);
    assert_eq!(code, 0);
    assert_eq!(r["facts"]["lie_dim"], 28);
    assert_eq!(r["facts"]["plus_dim"], 21);
    let (code, r, _) = malcev(&["envelope", "rs", "--z", "e", "--w", "f"]);
    assert_eq!(code, 0);
    assert!(r["facts"]["r"].is_string());
    assert_eq!(malcev(&["malcev", "rep-check", "--module", "natural-trivial"]).0, 0);
    assert_eq!(malcev(&["lie", "build-plus", "--algebra", "o0", "--mode", "semisimple-lie"]).0, 2);
}
