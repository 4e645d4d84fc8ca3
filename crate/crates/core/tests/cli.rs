use std::path::PathBuf;
use std::process::Command;

use circulant_codes::cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
use circulant_codes::Code;
use serde_json::Value;

fn json(args: &[&str]) -> (u8, Value) {
    let argv = ["circodes", "--format", "json"].iter().chain(args).map(|s| s.to_string());
    let out = run(argv);
    let v = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {:?} / {:?}", out.stdout, out.stderr));
    (out.code, v)
}

fn normalize(mut v: Value) -> Value {
    if let Some(stats) = v.get_mut("stats").and_then(Value::as_object_mut) {
        stats.insert("wall_time_ms".into(), Value::from(0));
    }
    v
}

/// Compares against `tests/golden/<name>.json`; `CIRCODES_BLESS=1` rewrites it.
fn golden(name: &str, args: &[&str]) {
    golden_exit(name, args, EXIT_OK)
}

fn golden_exit(name: &str, args: &[&str], exit: u8) {
    let (code, v) = json(args);
    assert_eq!(code, exit, "{name}");
    let v = normalize(v);
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", &format!("{name}.json")].iter().collect();
    if std::env::var_os("CIRCODES_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, serde_json::to_string_pretty(&v).unwrap() + "\n").unwrap();
        return;
    }
    let want: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v, want, "{name} differs from {}", path.display());
}

#[test]
fn golden_verify() {
    golden("verify_ld_c14", &["verify", "--graph", "C14(1,3)", "--code", "0,1,2,9,10,11", "--kind", "ld"]);
    golden_exit("verify_id_fail", &["verify", "--graph", "C16(1,3)", "--code", "xxxooooooxxxoooo", "--kind", "id"], EXIT_FAIL);
}

#[test]
fn golden_construct() {
    golden("construct_id_27", &["construct", "--n", "27"]);
}

#[test]
fn golden_share() {
    golden("share_id_c33", &["share", "--graph", "C33(1,3)", "--code", "0,1,4,5,11,12,15,16,22,23,26,27", "--scheme", "id"]);
}

#[test]
fn golden_patterns() {
    golden("patterns_ld_c20", &["patterns", "--graph", "C20(1,3)", "--code", "xxxoooxxooooxxxxoooo", "--family", "ld"]);
}

#[test]
fn golden_search() {
    golden("search_id_c20", &["search", "--graph", "C20(1,3)", "--kind", "id", "--no-construction", "--method", "exhaustive-bb", "--workers", "1"]);
    golden("search_ld_c16_decide", &["search", "--graph", "C16(1,3)", "--kind", "ld", "--target", "5", "--method", "mitm"]);
}

#[test]
fn golden_gamma() {
    golden("gamma_ld", &["gamma", "--kind", "ld", "--from", "13", "--to", "18", "--check-by-search"]);
}

#[test]
fn share_example_values() {
    let (_, v) = json(&["share", "--graph", "C33(1,3)", "--code", "0,1,4,5,11,12,15,16,22,23,26,27", "--scheme", "id"]);
    let base = &v["ledger"]["base"];
    assert_eq!(base["0"], serde_json::json!({"num": 17, "den": 6}));
    assert_eq!(base["1"], serde_json::json!({"num": 8, "den": 3}));
    for (_, m) in v["ledger"]["modified"].as_object().unwrap() {
        assert_eq!(*m, serde_json::json!({"num": 11, "den": 4}));
    }
    assert_eq!(v["modified_total"], serde_json::json!({"num": 33, "den": 1}));
}

#[test]
fn codes_round_trip_through_json() {
    for n in [7usize, 33, 200] {
        let c = Code::new(n, (0..n).filter(|v| v % 3 != 1)).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        let back: Code = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
    }
    let stale = r#"{"n": 5, "members": [0, 1], "pattern": "xoxoo"}"#;
    assert!(serde_json::from_str::<Code>(stale).is_err());
    let bare: Code = serde_json::from_str(r#"{"n": 5, "members": [1, 0]}"#).unwrap();
    assert_eq!(bare.to_pattern(), "xxooo");
    let (_, v) = json(&["construct", "--n", "46"]);
    let back: Code = serde_json::from_value(v["code"].clone()).unwrap();
    assert_eq!(back.len(), 18);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(["circodes"].iter().chain(args).map(|s| s.to_string())).code;
    assert_eq!(code(&["verify", "--graph", "C14(1,3)", "--code", "0,1,2,9,10,11", "--kind", "ld"]), EXIT_OK);
    assert_eq!(code(&["verify", "--graph", "C14(1,3)", "--code", "0,1", "--kind", "ld"]), EXIT_FAIL);
    assert_eq!(code(&["verify", "--graph", "C14(1,3)", "--code", "0,14", "--kind", "ld"]), EXIT_USAGE);
    assert_eq!(code(&["verify", "--graph", "C14(1,8)", "--code", "0", "--kind", "ld"]), EXIT_USAGE);
    assert_eq!(code(&["verify", "--graph", "C14(1,3)", "--code", "xxo", "--kind", "id"]), EXIT_USAGE);
    assert_eq!(code(&["frobnicate"]), EXIT_USAGE);
    assert_eq!(code(&["construct", "--n", "5"]), EXIT_USAGE);
    assert_eq!(code(&["patterns", "--graph", "C15(1,2,3)", "--code", "0,1", "--family", "id"]), EXIT_FAIL);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_circodes"))
        .args(["--format", "json", "construct", "--n", "33"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["size"], 12);
    let out = Command::new(env!("CARGO_BIN_EXE_circodes")).args(["verify", "--graph", "C9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE as i32));
}

#[test]
fn documented_examples() {
    let (code, v) = json(&["verify", "--graph", "C11(1,3)", "--code", "0,4,5,6", "--kind", "id"]);
    assert_eq!(code, EXIT_FAIL);
    assert_eq!(v["report"]["witness"], serde_json::json!({"type": "pair", "u": 0, "v": 10}));

    let (code, v) = json(&["gamma", "--kind", "ld", "--from", "13", "--to", "19"]);
    assert_eq!(code, EXIT_OK);
    let values: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["value"].as_u64().unwrap()).collect();
    assert_eq!(values, [5, 6, 6, 6, 7, 6, 7]);

    let (code, v) = json(&["search", "--graph", "C46(1,3)", "--kind", "id", "--target", "17"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["feasible"], false);
    let counts = v["stats"]["half_counts"].as_array().unwrap();
    let count_of = |range: [u64; 2], size: u64| {
        counts
            .iter()
            .find(|h| h["range"] == serde_json::json!(range) && h["size"] == size)
            .and_then(|h| h["count"].as_u64())
    };
    assert_eq!(count_of([0, 22], 8), Some(1919));
    assert_eq!(count_of([23, 45], 9), Some(23137));
}

#[test]
fn budget_exhaustion_exits_3() {
    let (code, v) = json(&["search", "--graph", "C110(1,3)", "--kind", "id", "--no-construction", "--time-budget", "0"]);
    assert_eq!(code, circulant_codes::cli::EXIT_BUDGET);
    assert_eq!(v["complete"], false);
}

#[test]
fn below_range_gamma_is_refused() {
    let out = run(["circodes", "gamma", "--kind", "ld", "--from", "9", "--to", "14"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stdout.is_empty());
}
