use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidlab"))
        .args(args)
        .env_remove("BRAIDLAB_BUDGET_MS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn check(args: &[&str], code: i32, expect: &str) {
    let o = run(args);
    assert_eq!(
        o.status.code(),
        Some(code),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(stdout(&o).trim_end(), expect, "{args:?}");
}

#[test]
fn braid_examples() {
    check(
        &["braid", "--n", "3", "--word", "A(1,3)", "--delete", "2"],
        0,
        "s1 s1",
    );
    check(
        &[
            "braid",
            "--n",
            "3",
            "--word",
            "[A(1,2),A(1,3)]",
            "--brunnian",
        ],
        0,
        "true",
    );
    check(&["braid", "--n", "2", "--word", "", "--trivial"], 0, "true");
    check(
        &["braid", "--n", "3", "--word", "A(1,2)", "--qbrunnian"],
        0,
        "false",
    );
}

#[test]
fn theta_examples() {
    check(&["theta", "--n", "1", "--word", "y1"], 0, "s1 s1");
    let o = run(&["theta", "--n", "2", "--word", "y2", "--linking"]);
    assert!(stdout(&o).contains("lk(1,2)=1, lk(1,3)=1, lk(2,3)=0"));
    let o = run(&["theta", "--n", "2", "--word", "[y1,y2^-1]", "--brunnian"]);
    assert!(stdout(&o).ends_with("brunnian: true\n"));
}

#[test]
fn gr_examples() {
    check(
        &["gr", "theta", "--n", "3", "--expr", "y1"],
        0,
        "B(1,4)+B(2,4)+B(3,4)",
    );
    check(&["gr", "rank", "--n", "3", "--m", "3"], 0, "2");
    check(
        &["gr", "delta-example"],
        0,
        "PASS (coefficients -1, 2; independence rank 3)",
    );
    check(
        &["gr", "check-relations", "--n", "4"],
        0,
        "15 relation instances, 0 nonzero residues",
    );
    let o = run(&["gr", "theta-matrix", "--n", "2", "--m", "2", "--matrix"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("rank 1 (witt rank 1, injective)\nelementary divisors [1]\n"));
    assert_eq!(
        run(&["gr", "rank", "--n", "3", "--m", "9"]).status.code(),
        Some(4)
    );
}

#[test]
fn homology_examples() {
    let o = run(&["homology", "--m", "2", "--N", "4", "--assert-known"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\n2  2  Z "));
    let o = run(&["homology", "--m", "1", "--N", "6"]);
    let rows: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .take(6)
        .map(String::from)
        .collect();
    assert!(rows[0].starts_with("1  1  Z "));
    assert!(rows[1..].iter().all(|r| r.contains(" 0      ")), "{rows:?}");
    assert_eq!(
        run(&["homology", "--m", "2", "--N", "0"]).status.code(),
        Some(4)
    );
}

#[test]
fn verify_examples() {
    let o = run(&["verify", "--N", "4", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "--N", "4", "--instance", "ap"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
    assert_eq!(run(&["verify", "--N", "0"]).status.code(), Some(4));
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["braid", "--n", "3", "--word", "s1 s("]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["braid", "--n", "3", "--word", "A(1,3)", "--delete", "7"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["braid", "--n", "3", "--word", "s1", "--linking"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["--budget-degree", "0", "gr", "rank", "--n", "3", "--m", "1"])
            .status
            .code(),
        Some(4)
    );
    let o = Command::new(env!("CARGO_BIN_EXE_braidlab"))
        .args(["homology", "--m", "5", "--N", "6"])
        .env("BRAIDLAB_BUDGET_MS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn json_reports_are_reproducible() {
    let args = ["--json", "--seed", "9", "verify", "--N", "3"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], serde_json::Value::Null);
    assert_eq!(v["config"]["seed"], 9);
    assert_eq!(v["config"]["budget"]["max_level"], 7);
    assert!(v["version"].is_string());
    assert_eq!(v["passed"], true);
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("braidlab-cli-{}.json", std::process::id()));
    let o = run(&[
        "--json",
        "--out",
        path.to_str().unwrap(),
        "gr",
        "rank",
        "--n",
        "4",
        "--m",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["rank"], 4);
    std::fs::remove_file(path).unwrap();
}
