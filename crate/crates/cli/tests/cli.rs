use std::path::PathBuf;
use std::process::{Command, Output};

fn eaqecc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eaqecc"))
        .args(args)
        .env_remove("EAQECC_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_code(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("eaqecc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

const GV: &[&str] = &[
    "--q", "4", "--n", "15", "--k1", "3", "--k2", "1", "--c", "1",
];

#[test]
fn gv_threshold_pair() {
    let o = eaqecc(&[&["gv-threshold"], GV].concat());
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "(2,1)");

    let o = eaqecc(&[&["gv-threshold", "--csv"], GV].concat());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("q,n,k1,k2,c,threshold_dz,threshold_dx"));
    assert_eq!(lines.next(), Some("4,15,3,1,1,2,1"));
}

#[test]
fn gv_check_verdicts() {
    let holds = eaqecc(&[&["gv-check", "--dz", "2", "--dx", "1"], GV].concat());
    assert!(holds.status.success());
    assert!(stdout(&holds).contains("HOLDS"));

    let exceeds = eaqecc(&[&["gv-check", "--dz", "3", "--dx", "2"], GV].concat());
    assert!(exceeds.status.success());
    assert!(stdout(&exceeds).contains("EXCEEDS"));

    let json = eaqecc(
        &[
            &["gv-check", "--dz", "3", "--dx", "2", "--output", "json"],
            GV,
        ]
        .concat(),
    );
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["holds"], false);
}

#[test]
fn analyze_css_pair() {
    let a = write_code("a.code", "field 2\nn 3\nk 1\nrow 1 1 1\n");
    let b = write_code("b.code", "# span{101}\nfield 2\nn 3\nk 1\nrow 1 0 1\n");
    let o = eaqecc(&[
        "analyze",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--output",
        "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["params"]["c"], 0);
    assert_eq!(v["css_compatible"], true);
    assert_eq!(v["params"]["k"], 1);
}

#[test]
fn parse_error_exit_code() {
    let a = write_code("ok.code", "field 2\nn 3\nk 1\nrow 1 1 1\n");
    let bad = write_code("bad.code", "field 2\nn 3\nk 1\nrow 1 x 1\n");
    let o = eaqecc(&["analyze", a.to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn usage_errors() {
    let small = eaqecc(&[&["--budget", "100", "gv-threshold"], GV].concat());
    assert_eq!(small.status.code(), Some(2));
    let unknown = eaqecc(&["no-such-command"]);
    assert_eq!(unknown.status.code(), Some(2));
    let not_coprime = eaqecc(&[
        "bch-construct",
        "--q",
        "2",
        "--n",
        "8",
        "--c1-cosets",
        "0",
        "--c2-cosets",
        "0",
    ]);
    assert_eq!(not_coprime.status.code(), Some(2));
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_eaqecc"))
        .args([&["gv-threshold"], GV].concat())
        .env("EAQECC_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bch_construct_reports_bounds() {
    let o = eaqecc(&[
        "bch-construct",
        "--q",
        "4",
        "--n",
        "15",
        "--c1-cosets",
        "0,1",
        "--c2-cosets",
        "0",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("[[15,12,3/2;1]]_4"));

    // Over budget the distances fall back to the bound, marked inexact.
    let o = eaqecc(&[
        "--budget",
        "1024",
        "bch-construct",
        "--q",
        "7",
        "--n",
        "19",
        "--c1-cosets",
        "0,1,2",
        "--c2-cosets",
        "0,18",
        "--csv",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&row[..6], &["7", "19", "12", "7", "4", "4"]);
}

#[test]
fn table2_matches_golden() {
    let o = eaqecc(&["tables", "--which", "2"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let out = stdout(&o);
    assert!(out.starts_with("row,q,n,k1,k2,c,dz,dx,c1_cosets,c2_cosets"));
    assert_eq!(out.lines().count(), 35);
}

#[test]
fn table1_bounds_only_reports_threshold_mismatches() {
    let o = eaqecc(&["tables", "--which", "1", "--bounds-only"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("row 6 threshold_dx"));
    assert!(err.contains("row 22 threshold_dx"));

    let o = eaqecc(&[
        "tables",
        "--which",
        "1",
        "--bounds-only",
        "--rule",
        "per-term",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["tables", "--which", "2", "--bounds-only"];
    let a = eaqecc(&args);
    let b = eaqecc(&["--serial", "tables", "--which", "2", "--bounds-only"]);
    assert_eq!(a.stdout, b.stdout);
    let e1 = eaqecc(&["enlarge-demo", "--q", "8", "--output", "json"]);
    let e2 = eaqecc(&["enlarge-demo", "--q", "8", "--output", "json"]);
    assert_eq!(e1.stdout, e2.stdout);
    assert!(stdout(&e1).contains("\"after\""));
}
