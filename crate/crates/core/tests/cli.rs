use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z4-census"))
        .args(args)
        .env_remove("CENSUS_MAX_STATES")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_labeling(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn tuples_genus_three() {
    let out = run(&["tuples", "--genus", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        concat!(
            "genus,r,s,t,m,n,class_count,total\n",
            "3,0,0,0,0,3,0,4\n",
            "3,0,0,0,1,1,1,4\n",
            "3,0,0,2,0,0,1,4\n",
            "3,0,1,0,0,1,1,4\n",
            "3,1,0,0,0,1,1,4\n",
        )
    );
    let out = run(&["tuples", "--genus", "3", "--nonzero-only"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 1 + 4 + 1, "{text}");
    assert!(text.ends_with("total 4\n"));
}

#[test]
fn tuples_genus_one_nonzero_only() {
    let out = run(&[
        "tuples",
        "--genus",
        "1",
        "--nonzero-only",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 1 + 3);
    assert!(!stdout(&out).contains(",0,0,0,0,2,"));
}

#[test]
fn tuples_json_schema() {
    let out = run(&["tuples", "--genus", "2", "--format", "json"]);
    assert_eq!(
        stdout(&out),
        "{\"genus\":2,\"entries\":[{\"tuple\":[0,0,1,0,1],\"class_count\":1,\"euler_char\":\"-1/4\"}],\"total\":1}\n"
    );
}

#[test]
fn genus_zero_is_a_usage_error() {
    for args in [
        &["tuples", "--genus", "0"][..],
        &["verify", "--genus", "0"],
        &["corollaries", "--max-genus", "0"],
        &["count", "--from", "3", "--to", "2"],
        &["verify", "--genus", "2", "--from", "1", "--to", "3"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_genus_three_passes() {
    let out = run(&["verify", "--genus", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 5);
    assert!(lines.iter().all(|v| v["status"] == "pass"));
    let orbits: u64 = lines.iter().map(|v| v["orbits"].as_u64().unwrap()).sum();
    assert_eq!(orbits, 4);
    let first_line = stdout(&out).lines().next().unwrap().to_string();
    let positions: Vec<usize> = [
        "\"tuple\"",
        "\"labelings\"",
        "\"orbits\"",
        "\"expected\"",
        "\"status\"",
        "\"representatives\"",
    ]
    .iter()
    .map(|k| first_line.find(k).unwrap())
    .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{first_line}");
}

#[test]
fn verify_sweep_passes() {
    let out = run(&["verify", "--from", "1", "--to", "8"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).lines().last().unwrap().contains("0 fail"));
}

#[test]
fn verify_overflow_exits_one_unless_skipped() {
    let out = run(&["verify", "--genus", "3", "--max-states", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("overflow"));

    let out = run(&[
        "verify",
        "--genus",
        "3",
        "--max-states",
        "1",
        "--skip-oversize",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("skipped"));
}

#[test]
fn max_states_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_z4-census"))
        .args(["verify", "--genus", "3"])
        .env("CENSUS_MAX_STATES", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = Command::new(env!("CARGO_BIN_EXE_z4-census"))
        .args(["verify", "--genus", "3", "--max-states", "1000"])
        .env("CENSUS_MAX_STATES", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_rejects_csv() {
    let out = run(&["verify", "--genus", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn classify_labelings() {
    let dir = tempfile::tempdir().unwrap();
    let odd_f = write_labeling(
        dir.path(),
        "odd_f.json",
        r#"{"tuple":[0,0,0,1,1],"a":[],"b":[],"c":[],"d":[],"e":[2],"f":[3],"g":[2]}"#,
    );
    let out = run(&["classify", &odd_f]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"admissible\":true,\"k\":1,\"class_count_of_tuple\":1}\n"
    );

    let even_a = write_labeling(
        dir.path(),
        "even_a.json",
        r#"{"tuple":[1,0,0,0,0],"a":[2],"b":[],"c":[],"d":[],"e":[],"f":[],"g":[]}"#,
    );
    let out = run(&["classify", &even_a]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"admissible\":false,\"k\":null,\"class_count_of_tuple\":1}\n"
    );

    let mismatched = write_labeling(
        dir.path(),
        "bad.json",
        r#"{"tuple":[0,2,0,0,0],"a":[],"b":[1],"c":[0,0],"d":[],"e":[],"f":[],"g":[]}"#,
    );
    let out = run(&["classify", &mismatched]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("family b"));

    let garbage = write_labeling(dir.path(), "garbage.json", "{not json");
    assert_eq!(run(&["classify", &garbage]).status.code(), Some(2));
    assert_eq!(
        run(&["classify", "/nonexistent/labeling.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn corollaries() {
    let out = run(&["corollaries", "--max-genus", "40"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches(" pass").count(), 2);
    assert_eq!(
        run(&["corollaries", "--max-genus", "2"]).status.code(),
        Some(0)
    );
}

#[test]
fn count_and_sequence() {
    let out = run(&["count", "--from", "1", "--to", "4", "--format", "csv"]);
    assert_eq!(stdout(&out), "genus,total\n1,3\n2,1\n3,4\n4,5\n");

    let out = run(&[
        "sequence",
        "--from",
        "2",
        "--to",
        "3",
        "--verify-up-to",
        "3",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "genus,total_classes,tuple_count,verified\n2,1,1,verified\n3,4,5,verified\n"
    );

    let out = run(&[
        "sequence",
        "--from",
        "2",
        "--to",
        "3",
        "--verify-up-to",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("verify.jsonl");
    let to_stdout = run(&["verify", "--from", "1", "--to", "5", "--format", "json"]);
    let to_file = run(&[
        "verify",
        "--from",
        "1",
        "--to",
        "5",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), to_stdout.stdout);
}
