use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quandlekit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("quandlekit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn validate_bundled() {
    let o = run(&["validate", "--bundled", "order12"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("order 12"));
}

#[test]
fn validate_reports_axiom_failure() {
    let p = temp("idem.txt", "2\n1 0\n0 1\n");
    let o = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("axiom 1 fails at x=0"));
}

#[test]
fn validate_reports_parse_position() {
    let p = temp("short.txt", "3\n0 2 1\n2 1\n1 0 2\n");
    let o = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3, column 4"), "{err}");
}

#[test]
fn validate_one_indexed_left_file() {
    let p = temp("r3.txt", "3\n1 3 2\n3 2 1\n2 1 3\n");
    let o = run(&["validate", "--one-indexed", "--convention", "left", p.to_str().unwrap()]);
    assert!(o.status.success());
}

#[test]
fn analyze_affine_json() {
    let out = std::env::temp_dir().join(format!("quandlekit-a13-{}.json", std::process::id()));
    let o = run(&["analyze", "--affine", "13", "8", "--json", out.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["rank"], 4);
    assert_eq!(v["inner_order"], 52);
    assert_eq!(v["multiplicity_free"], true);
    assert_eq!(v["input"], "affine:13:8");
    assert_eq!(v["decomposition"]["multiplicities"]["ind:4"], 1);
}

#[test]
fn analyze_order12() {
    let o = run(&["analyze", "--bundled", "order12", "--json", "-"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let json = &text[text.find('{').unwrap()..];
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    assert_eq!(v["rank"], 7);
    assert_eq!(v["multiplicity_free"], false);
    assert_eq!(v["certificate"]["kind"], "non_commuting");
}

#[test]
fn analyze_is_byte_identical() {
    let a = run(&["analyze", "--bundled", "order12", "--json", "-"]);
    let b = run(&["analyze", "--bundled", "order12", "--json", "-"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn analyze_composite_warning() {
    let o = run(&["analyze", "--affine", "21", "11"]);
    let text = stdout(&o);
    assert!(text.contains("connected         true"));
    assert!(text.contains("warning:") && text.contains("m = 21"), "{text}");
}

#[test]
fn analyze_not_connected() {
    let p = temp("triv3.txt", "3\n0 0 0\n1 1 1\n2 2 2\n");
    let o = run(&["analyze", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("multiplicity-free not-applicable"));
}

#[test]
fn tensor_listings() {
    let text = stdout(&run(&["tensor", "--affine", "13", "8"]));
    assert!(text.starts_with("4 classes\n[(0,0)] size 13\n[(0,1)] size 52\n[(0,2)] size 52\n[(0,4)] size 52\n"));
    let text = stdout(&run(&["tensor", "--affine", "13", "9", "--tau"]));
    assert!(text.contains("3 classes modulo tau"));
    let text = stdout(&run(&["tensor", "--affine", "3", "2"]));
    assert!(text.starts_with("2 classes"));
}

#[test]
fn decompose_prime_only() {
    let o = run(&["decompose", "--affine", "13", "8", "--json", "-"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains(
        r#""multiplicities": {
    "triv": 1,"#
    ));
    let o = run(&["decompose", "--affine", "21", "11"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gelfand_command() {
    let text = stdout(&run(&["gelfand", "--bundled", "order12"]));
    assert!(text.contains("Gelfand pair (Inn, stab)  false"));
    assert!(text.contains("witness:"));
    let text = stdout(&run(&["gelfand", "--affine", "13", "9"]));
    assert!(text.contains("Gelfand pair (Inn, stab)  true"));
}

#[test]
fn scan_small() {
    let text = stdout(&run(&["scan", "--max-order", "5", "--affine-only"]));
    let rows: Vec<&str> = text.lines().skip(1).map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(rows[..4], ["affine:3:2", "affine:5:2", "affine:5:3", "affine:5:4"]);
    assert!(text.contains("all 4 affine rows multiplicity-free"));
    let text = stdout(&run(&["scan", "--max-order", "13"]));
    assert!(text.contains("all 32 affine rows multiplicity-free"));
    assert!(text.contains("bundled:order12"));
}

#[test]
fn rejects_missing_input() {
    assert!(!run(&["analyze"]).status.success());
    assert!(!run(&["analyze", "--affine", "9", "3"]).status.success());
}
