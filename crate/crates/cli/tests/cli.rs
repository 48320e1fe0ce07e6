use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drg-spectra"))
        .args(args)
        .env("DRG_SPECTRA_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn construct_then_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("odd7.txt");
    let p = path.to_str().unwrap();
    let o = run(&["construct", "odd", "7", "--out", p]);
    assert!(o.status.success());
    let o = run(&["analyze", p]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("array {4,3,3;1,1,2}"), "{out}");
    assert!(out.contains("spectrum 4^1 2^14 -1^14 -3^6"), "{out}");
    assert!(out.contains("classification OddGraph(3)"), "{out}");
}

#[test]
fn analyze_array_as_json() {
    let o = run(&["--json", "analyze", "--array", "{7,6,5;1,2,3}"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["classification"]["verdict"], "FoldedCube(3)");
    assert_eq!(v["array"], "{7,6,5;1,2,3}");
    assert_eq!(v["vertices"], "64");
    assert_eq!(v["q_polynomial_orderings"].as_array().unwrap().len(), 2);
}

#[test]
fn non_distance_regular_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    fs::write(&path, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let o = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not distance-regular"));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(
        run(&["analyze", "--array", "{1,2;3}"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["construct", "odd", "8"]).status.code(), Some(2));
    assert_eq!(
        run(&["analyze", "/nonexistent/graph.txt"]).status.code(),
        Some(2)
    );
    let o = run(&[
        "sieve",
        "--beta-min",
        "-4",
        "--beta-max",
        "-2",
        "--mu-max",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn sieve_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for path in [&a, &b] {
        let o = run(&[
            "sieve",
            "--beta-min",
            "-5",
            "--beta-max",
            "-3",
            "--mu-max",
            "20",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        assert!(String::from_utf8_lossy(&o.stderr).contains("summary records=60"));
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert_eq!(text.lines().count(), 60);
    assert!(text.contains("beta=-5 mu=19 k=2185"));
}

#[test]
fn family_and_double() {
    let o = run(&["family", "--beta", "-2", "--mu", "1"]);
    let out = stdout(&o);
    assert!(out.contains("k 4 c2 1 c3 2"), "{out}");
    assert!(out.contains("theta 4 -3 2 -1"), "{out}");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c7.txt");
    run(&["construct", "cycle", "7", "--out", path.to_str().unwrap()]);
    let o = run(&[
        "double",
        path.to_str().unwrap(),
        "--out",
        dir.path().join("d.txt").to_str().unwrap(),
    ]);
    let out = stdout(&o);
    assert!(out.contains("bipartite true"), "{out}");
    assert!(out.contains("array {2,1,1,1,1,1,1;1,1,1,1,1,1,2}"), "{out}");
}

#[test]
fn identity_check_passes() {
    let o = run(&[
        "check-identities",
        "--trials",
        "40",
        "--seed",
        "3",
        "--dmax",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("pass ")));
    let o = run(&["check-identities", "--trials", "0"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("vacuously"));
}
