//! End-to-end tests of the binary: report round-trips, seeded determinism,
//! exit codes, and format parity.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_grmlab")
}

fn write_fixtures(dir: &std::path::Path) -> (PathBuf, PathBuf) {
    let lambda1 = dir.join("lambda1.json");
    std::fs::write(
        &lambda1,
        r#"{
            "prime": 2,
            "vertices": ["1", "2"],
            "arrows": [
                {"name": "a", "from": "1", "to": "1"},
                {"name": "b", "from": "1", "to": "2"}
            ],
            "relations": [
                [{"coeff": 1, "path": ["a", "a", "a"]}],
                [{"coeff": 1, "path": ["a", "b"]}]
            ],
            "nilpotency_bound": 4
        }"#,
    )
    .unwrap();
    let kronecker = dir.join("kronecker.json");
    std::fs::write(
        &kronecker,
        r#"{
            "prime": 2,
            "vertices": ["1", "2"],
            "arrows": [
                {"name": "a", "from": "1", "to": "2"},
                {"name": "b", "from": "1", "to": "2"}
            ],
            "relations": [],
            "nilpotency_bound": 2
        }"#,
    )
    .unwrap();
    (lambda1, kronecker)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .env_remove("GRMLAB_SEED")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json report")
}

#[test]
fn measure_reports_the_expected_value() {
    let dir = std::env::temp_dir().join("grmlab-cli-measure");
    std::fs::create_dir_all(&dir).unwrap();
    let (lambda1, _) = write_fixtures(&dir);
    let out = run(&[
        "measure",
        "--algebra",
        lambda1.to_str().unwrap(),
        "--module",
        "P:1",
        "--weights",
        "1,1",
    ]);
    let report = json_of(&out);
    assert_eq!(
        report["measure"],
        serde_json::json!(["1/1", "2/1", "4/1"])
    );
    // simple module, one-element chain
    let out = run(&[
        "measure",
        "--algebra",
        lambda1.to_str().unwrap(),
        "--module",
        "S:1",
        "--weights",
        "3,1",
    ]);
    let report = json_of(&out);
    assert_eq!(report["measure"], serde_json::json!(["3/1"]));
    assert_eq!(report["witness"].as_array().unwrap().len(), 1);
}

#[test]
fn certify_passes_and_reports_reparse() {
    let dir = std::env::temp_dir().join("grmlab-cli-certify");
    std::fs::create_dir_all(&dir).unwrap();
    let (lambda1, _) = write_fixtures(&dir);
    let out = run(&[
        "certify",
        "--algebra",
        lambda1.to_str().unwrap(),
        "--module",
        "P:1",
        "--weights",
        "1,2",
    ]);
    let report = json_of(&out);
    assert_eq!(report["verdict"], "left-strongly-quasihereditary");
    assert_eq!(report["ell"], 3);
    assert!(report["gldim"].as_u64().unwrap() <= 3);
    assert_eq!(report["config"]["weights"], serde_json::json!(["1/1", "2/1"]));
}

#[test]
fn same_seed_reproduces_byte_identical_reports() {
    let dir = std::env::temp_dir().join("grmlab-cli-seed");
    std::fs::create_dir_all(&dir).unwrap();
    let (lambda1, _) = write_fixtures(&dir);
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for out in [&a, &b] {
        let st = run(&[
            "certify",
            "--algebra",
            lambda1.to_str().unwrap(),
            "--module",
            "Lambda+DLambda",
            "--weights",
            "1,1",
            "--seed",
            "42",
            "--output",
            out.to_str().unwrap(),
        ]);
        assert!(st.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn env_seed_is_used_when_no_flag_is_given() {
    let dir = std::env::temp_dir().join("grmlab-cli-env");
    std::fs::create_dir_all(&dir).unwrap();
    let (lambda1, _) = write_fixtures(&dir);
    let out = Command::new(bin())
        .args([
            "measure",
            "--algebra",
            lambda1.to_str().unwrap(),
            "--module",
            "S:1",
            "--weights",
            "1,1",
        ])
        .env("GRMLAB_SEED", "777")
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["config"]["seed"], 777);
}

#[test]
fn tsv_and_json_carry_identical_numeric_content() {
    let dir = std::env::temp_dir().join("grmlab-cli-tsv");
    std::fs::create_dir_all(&dir).unwrap();
    let (lambda1, _) = write_fixtures(&dir);
    let args = [
        "chain",
        "--algebra",
        lambda1.to_str().unwrap(),
        "--module",
        "P:1",
        "--weights",
        "2,1",
    ];
    let json_out = json_of(&run(&args));
    let mut tsv_args = args.to_vec();
    tsv_args.extend(["--format", "tsv"]);
    let tsv_out = run(&tsv_args);
    assert!(tsv_out.status.success());
    let tsv_text = String::from_utf8(tsv_out.stdout).unwrap();
    // every measure entry and the chain length appear verbatim in the tsv
    assert!(tsv_text.contains("ell\t4"));
    for (i, step) in json_out["steps"].as_array().unwrap().iter().enumerate() {
        for (j, entry) in step["measure"].as_array().unwrap().iter().enumerate() {
            let line = format!("steps[{i}].measure[{j}]\t{}", entry.as_str().unwrap());
            assert!(tsv_text.contains(&line), "missing {line}");
        }
    }
    // formats differ only in presentation
    assert_eq!(
        json_out["config"]["format"], "json",
        "json report echoes its format"
    );
    assert!(tsv_text.contains("config.format\ttsv"));
}

#[test]
fn verify_chain_exit_codes() {
    let dir = std::env::temp_dir().join("grmlab-cli-verify");
    std::fs::create_dir_all(&dir).unwrap();
    let (lambda1, kronecker) = write_fixtures(&dir);
    // prerejective-but-not-rejective control: exit 1
    let chain = dir.join("kchain.json");
    std::fs::write(
        &chain,
        r#"{
            "levels": [
                [{"dims": {"1": 2, "2": 2},
                  "arrows": {"a": [[1,0],[0,1]], "b": [[0,1],[0,0]]}},
                 "S:1"],
                ["S:1"]
            ]
        }"#,
    )
    .unwrap();
    let out = run(&[
        "verify-chain",
        "--algebra",
        kronecker.to_str().unwrap(),
        "--chain",
        chain.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["prerejective"], true);
    assert_eq!(report["rejective"], false);
    // a rejective single-level chain: exit 0
    let ok_chain = dir.join("ok.json");
    std::fs::write(&ok_chain, r#"{"levels": [["S:1"]]}"#).unwrap();
    let out = run(&[
        "verify-chain",
        "--algebra",
        lambda1.to_str().unwrap(),
        "--chain",
        ok_chain.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_input_exits_with_code_two() {
    let dir = std::env::temp_dir().join("grmlab-cli-bad");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = run(&[
        "measure",
        "--algebra",
        bad.to_str().unwrap(),
        "--module",
        "P:1",
        "--weights",
        "1,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    // missing file
    let out = run(&[
        "measure",
        "--algebra",
        dir.join("missing.json").to_str().unwrap(),
        "--module",
        "P:1",
        "--weights",
        "1,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // wrong weight count
    let (lambda1, _) = write_fixtures(&dir);
    let out = run(&[
        "measure",
        "--algebra",
        lambda1.to_str().unwrap(),
        "--module",
        "P:1",
        "--weights",
        "1,1,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn iyama_and_adr_kinds_certify() {
    let dir = std::env::temp_dir().join("grmlab-cli-kinds");
    std::fs::create_dir_all(&dir).unwrap();
    let (lambda1, _) = write_fixtures(&dir);
    let out = run(&[
        "certify",
        "--algebra",
        lambda1.to_str().unwrap(),
        "--kind",
        "adr",
    ]);
    let report = json_of(&out);
    assert_eq!(report["verdict"], "left-strongly-quasihereditary");
    assert!(report["gldim"].as_u64().unwrap() <= 3);
    let out = run(&[
        "certify",
        "--algebra",
        lambda1.to_str().unwrap(),
        "--kind",
        "iyama",
        "--module",
        "P:1",
    ]);
    let report = json_of(&out);
    assert_eq!(report["verdict"], "left-strongly-quasihereditary");
}
