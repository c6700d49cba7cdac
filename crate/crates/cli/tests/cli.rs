use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jordanian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn symplecton_defining_form() {
    let o = run(&["compute", "symplecton", "--j", "1", "--m", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("(abar*a + a*abar)/sqrt(2)"));
}

#[test]
fn negative_weight_argument() {
    let o = run(&["compute", "plane-basis", "--j", "1/2", "--m", "-1/2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "eta");
}

#[test]
fn fmatrix_spin_half() {
    // lower unitriangular; +h from e^{sigma/2} at m1 = -1/2, -h at m1 = 1/2
    let o = run(&["compute", "fmatrix", "--j1", "1/2", "--j2", "1/2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).take(4).collect();
    assert_eq!(
        rows,
        [
            "[1, 0, 0, 0]",
            "[1*h, 1, 0, 0]",
            "[0, 0, 1, 0]",
            "[0, 0, -1*h, 1]"
        ]
    );
}

#[test]
fn dfun_spin_one_json() {
    let o = run(&["compute", "dfun", "--j", "1", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["basis_order"], serde_json::json!(["-1", "0", "1"]));
    // top-left of the displayed matrix is the (1, 1) entry: x^2 + h*x*v
    assert_eq!(
        v["entries"][2][2],
        serde_json::json!([["x^2", "1"], ["x*v", "(1)*h"]])
    );
}

#[test]
fn invalid_label_is_usage_error() {
    let o = run(&["compute", "symplecton", "--j", "1", "--m", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["compute", "cgc", "--j1", "1/2", "--j2", "1/2", "--j", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn zero_spin_bound_runs_nothing() {
    let o = run(&["verify", "--suite", "all", "--max-spin", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 checks"));
}

#[test]
fn hopf_suite_passes_and_is_deterministic() {
    let a = run(&[
        "verify",
        "--suite",
        "hopf",
        "--max-spin",
        "1",
        "--format",
        "json",
    ]);
    let b = run(&[
        "verify",
        "--suite",
        "hopf",
        "--max-spin",
        "1",
        "--format",
        "json",
        "--jobs",
        "2",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Vec<serde_json::Value> = serde_json::from_slice(&a.stdout).unwrap();
    assert!(!v.is_empty());
    for r in &v {
        for key in ["suite", "check", "paper_ref", "params", "pass", "detail"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn strict_mode_reports_calibration_as_failure() {
    let o = run(&["verify", "--suite", "product-law", "--max-spin", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ratio_table"));
    let o = run(&[
        "verify",
        "--suite",
        "product-law",
        "--max-spin",
        "1/2",
        "--strict-paper-coefficients",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL product-law::unit_ratios"));
}

#[test]
fn list_suites_names_every_suite() {
    let o = run(&["list-suites"]);
    let text = stdout(&o);
    for s in [
        "su2data",
        "twist",
        "hopf",
        "ohn",
        "symplecton",
        "product-law",
        "slh2",
    ] {
        assert!(text.contains(s));
    }
}
