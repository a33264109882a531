use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unicyclic")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn field(csv: &str, name: &str) -> f64 {
    csv.lines()
        .find_map(|l| l.strip_prefix(&format!("{name},")))
        .unwrap_or_else(|| panic!("no {name} in {csv}"))
        .parse()
        .unwrap()
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("unicyclic-cli-{}-{name}", std::process::id()));
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn spectral_builtins() {
    let out = run(&["spectral", "u(6,4)"]);
    assert!(out.status.success());
    let csv = stdout(&out);
    assert!((field(&csv, "lambda") - 4.5615).abs() < 1e-3);
    assert_eq!(field(&csv, "girth"), 4.0);
    assert!((field(&stdout(&run(&["spectral", "s1"])), "lambda") - 4.4142).abs() < 1e-3);
}

#[test]
fn spectral_reads_edge_lists() {
    let path = temp_file("p2.txt", "2 1\n1 2\n");
    let out = run(&["spectral", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!((field(&stdout(&out), "lambda") - 2.0).abs() < 1e-12);

    let bad = temp_file("bad.txt", "3 2\n1 2\n3 1\n");
    let out = run(&["spectral", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn json_format() {
    let out = run(&["--format", "json", "spectral", "u(8,6)"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n"], 8);
    assert!((v["lambda"].as_f64().unwrap() - 4.4989).abs() < 1e-3);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--n", "8", "--g", "6"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--n", "9", "--g", "7"]).status.code(), Some(1));
    assert_eq!(run(&["spectral", "u(4,6)"]).status.code(), Some(2));
    assert_eq!(run(&["spectral", "missing-file.txt"]).status.code(), Some(2));
    assert_eq!(run(&["--tol", "0", "reproduce"]).status.code(), Some(2));
    assert_eq!(run(&["--jobs", "0", "verify", "--n", "6", "--g", "4"]).status.code(), Some(2));
    assert_eq!(run(&["properties", "--scope", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_table() {
    let out = run(&["verify", "--n", "6", "--g", "4"]);
    let csv = stdout(&out);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("rank,canonical_form,lambda,is_u_ng"));
    assert_eq!(lines.count(), 4);
    assert!(csv.lines().nth(1).unwrap().ends_with(",true"));
}

#[test]
fn reproduce_and_out_flag() {
    let path = std::env::temp_dir().join(format!("unicyclic-cli-{}-repro.csv", std::process::id()));
    let out = run(&["--out", path.to_str().unwrap(), "reproduce"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let csv = fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("name,reported,computed,abs_dev\n"));
    assert_eq!(csv.lines().count(), 10);
}

#[test]
fn properties_scope() {
    let out = run(&["properties", "--scope", "graph-core"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().skip(1).all(|l| l.ends_with(",pass")));
}

#[test]
fn surgeries() {
    let star_on_c4 = temp_file("c4star.txt", "7 7\n1 2\n1 4\n1 5\n2 3\n3 4\n5 6\n5 7\n");
    let out = run(&["surgery", "flatten", star_on_c4.to_str().unwrap()]);
    assert!(out.status.success());
    let flat = stdout(&out);
    assert!(flat.starts_with("7 7\n"));
    let flat_file = temp_file("flat.txt", &flat);
    let before = field(&stdout(&run(&["spectral", star_on_c4.to_str().unwrap()])), "lambda");
    let after = field(&stdout(&run(&["spectral", flat_file.to_str().unwrap()])), "lambda");
    assert!(after < before);

    let u64 = stdout(&run(&["surgery", "chain", "cyc_pend(4,[1,2])"]));
    let u64_file = temp_file("chained.txt", &u64);
    let lambda = field(&stdout(&run(&["spectral", u64_file.to_str().unwrap()])), "lambda");
    assert!((lambda - field(&stdout(&run(&["spectral", "u(6,4)"])), "lambda")).abs() < 1e-9);

    assert_eq!(run(&["surgery", "chain", "cyc_pend(4,[1,3])"]).status.code(), Some(2));
    assert!(run(&["surgery", "chain", "--order", "1,3", "cyc_pend(4,[1,3])"]).status.success());
    assert_eq!(run(&["surgery", "open", "--at", "1", "u(6,4)"]).status.code(), Some(2));
    let tree = stdout(&run(&["surgery", "open", "--at", "1", "u(6,5)"]));
    assert!(tree.starts_with("6 5\n"));
}
