use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn liecas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecas"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const SCALE: &str = "J=0,P=1,K=1,Hbar=0,M=2";

#[test]
fn casimir_golden_outputs() {
    let o = liecas(&["casimir", "poincare", "--degree", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "h^2 - p1^2 - p2^2 - p3^2\n");
    assert_eq!(
        stdout(&liecas(&["casimir", "so3", "--degree", "2"])),
        "j1^2 + j2^2 + j3^2\n"
    );
    assert_eq!(
        stdout(&liecas(&["casimir", "extended_galilei", "--degree", "1"])),
        "m\n"
    );
    assert_eq!(
        stdout(&liecas(&["casimir", "poincare", "--degree", "4", "--new"]))
            .lines()
            .count(),
        1
    );
}

#[test]
fn degree_above_cap_is_a_usage_error() {
    let o = liecas(&["casimir", "so3", "--degree", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        liecas(&["--degree-cap", "6", "casimir", "so3", "--degree", "5"])
            .status
            .success()
    );
}

#[test]
fn show_and_check() {
    let o = liecas(&["show", "extended_galilei"]);
    assert!(stdout(&o).contains("[p1, kg1] = -1*m"));
    let so3 = stdout(&liecas(&["show", "so3"]));
    assert_eq!(so3.lines().filter(|l| l.starts_with('[')).count(), 3);
    let o = liecas(&["show", "missing.alg"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.alg"));
    for name in ["poincare", "extended_poincare_hbar"] {
        let o = liecas(&["check", name]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), "valid\n");
    }
}

/// Builtin algebra file with the bracket `[left, right]` rewritten by `edit`.
fn edited(name: &str, left: &str, right: &str, edit: impl Fn(&mut Vec<Value>, usize)) -> String {
    let text = stdout(&liecas(&["--format", "report", "show", name]));
    let mut file: Value = serde_json::from_str(&text).unwrap();
    let brackets = file["brackets"].as_array_mut().unwrap();
    let at = brackets
        .iter()
        .position(|b| b["left"] == left && b["right"] == right)
        .expect("bracket present");
    edit(brackets, at);
    serde_json::to_string_pretty(&file).unwrap()
}

#[test]
fn check_reports_violations_in_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    let flipped = edited("poincare", "p1", "kp1", |b, at| {
        let c = &mut b[at]["terms"][0]["coeff"];
        *c = Value::from(if *c == "1" { "-1" } else { "1" });
    });
    fs::write(&path, flipped).unwrap();
    let o = liecas(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().all(|l| l.starts_with("violated: [")));

    fs::write(
        &path,
        "{\"name\": \"x\", \"generators\": [\"a\"], \"extra\": 1}",
    )
    .unwrap();
    let o = liecas(&["show", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn contraction_matches_extended_galilei() {
    let o = liecas(&[
        "contract",
        "extended_poincare_hbar",
        "--scale",
        SCALE,
        "--compare",
        "extended_galilei",
        "--map",
        "KP=KG,Hbar=H",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().last(), Some("MATCH"));
    let o = liecas(&[
        "contract",
        "extended_poincare_hbar",
        "--scale",
        SCALE,
        "--compare",
        "extended_galilei",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ill_defined_contraction_exits_3() {
    let o = liecas(&["contract", "poincare", "--scale", "H=1,P=0,K=0,J=0"]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr);
    for i in 1..=3 {
        assert!(err.contains(&format!("[p{i}, kp{i}]")));
    }
}

#[test]
fn zero_scaling_leaves_the_algebra_unchanged() {
    let o = stdout(&liecas(&["contract", "poincare", "--scale", "all=0"]));
    let p = stdout(&liecas(&["show", "poincare"]));
    let brackets = |s: &str| s.lines().skip(1).map(str::to_string).collect::<Vec<_>>();
    assert_eq!(brackets(&o), brackets(&p));
}

#[test]
fn scaling_file_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scale.json");
    fs::write(
        &path,
        r#"{"algebra": "so3", "exponents": {"j1": 0, "j2": 0, "j3": 0}}"#,
    )
    .unwrap();
    let o = liecas(&["contract", "so3", "--scale-file", path.to_str().unwrap()]);
    assert!(o.status.success());
    fs::write(&path, r#"{"algebra": "poincare", "exponents": {}}"#).unwrap();
    assert_eq!(
        liecas(&["contract", "so3", "--scale-file", path.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn rank_counts_invariants() {
    assert_eq!(stdout(&liecas(&["rank", "poincare"])), "2\n");
    assert_eq!(
        stdout(&liecas(&["--seed", "9", "rank", "extended_galilei"])),
        "3\n"
    );
}

#[test]
fn verify_paper_is_green_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.jsonl"), dir.path().join("b.jsonl"));
    let o1 = liecas(&["verify-paper", "--out", a.to_str().unwrap()]);
    let o2 = liecas(&["--sequential", "verify-paper", "--out", b.to_str().unwrap()]);
    assert!(o1.status.success(), "{}", stdout(&o1));
    assert_eq!(o1.stdout, o2.stdout);
    let (ra, rb) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(ra, rb);
    let text = String::from_utf8(ra).unwrap();
    assert_eq!(
        text.lines()
            .filter(|l| l.contains("\"id\":\"operator_table.") && l.contains("\"info\""))
            .count(),
        6
    );
}

#[test]
fn verify_paper_catches_a_corrupted_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gal.json");
    fs::write(
        &path,
        edited("extended_galilei", "p1", "kg1", |b, at| {
            b.remove(at);
        }),
    )
    .unwrap();
    let arg = format!("extended_galilei={}", path.display());
    let o = liecas(&["--degree-cap", "2", "verify-paper", "--replace", &arg]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("[FAIL] contraction.extended_galilei"));
}
