use std::io::Write;
use std::process::{Command, Output, Stdio};

use squareice_cli::{parse_csv_table, parse_json_table, CSV_HEADER};

fn squareice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_squareice"))
        .args(args)
        .env_remove("SQUAREICE_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn count_by_formula() {
    let o = squareice(&["count", "--n", "4", "--method", "formula"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "A(4;1) [formula] = 42\n");
    let o = squareice(&["count", "--n", "1"]);
    assert_eq!(stdout(&o), "A(1;1) [formula] = 1\n");
}

#[test]
fn count_three_methods_agree() {
    let o = squareice(&["count", "--n", "6", "--method", "brute,transfer,formula"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    for m in ["brute", "transfer", "formula"] {
        assert!(out.contains(&format!("A(6;1) [{m}] = 7436")), "{out}");
    }
    assert!(out.contains("[ok] methods agree"));
}

#[test]
fn count_beyond_brute_bound_is_an_error() {
    let o = squareice(&["count", "--n", "7", "--method", "brute"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exceeds the configured bound"));
}

#[test]
fn xenum_polynomial_and_values() {
    let o = squareice(&["xenum", "--n", "3"]);
    assert_eq!(stdout(&o).lines().next(), Some("A(3;x) = x + 6"));
    let o = squareice(&["xenum", "--n", "4", "--at", "2"]);
    assert_eq!(stdout(&o).lines().next(), Some("A(4;2) = 64"));
    let o = squareice(&["xenum", "--n", "4", "--at", "3"]);
    assert_eq!(stdout(&o).lines().next(), Some("A(4;3) = 90"));
    let o = squareice(&["xenum", "--n", "3", "--at", "1/2"]);
    assert_eq!(stdout(&o).lines().next(), Some("A(3;1/2) = 13/2"));
    let o = squareice(&["xenum", "--n", "3", "--at", "1/0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bseq_values() {
    let o = squareice(&["bseq", "--max-n", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("B(1;x) = 1\nB(2;x) = 1\nB(3;x) = 1\n"));
    let o = squareice(&["bseq", "--max-n", "6"]);
    let out = stdout(&o);
    assert!(out.contains("B(4;x) = x + 6\n"));
    assert!(out.contains("B(6;x) = x^3 + 12x^2 + 70x + 60\n"));
    assert!(out.contains("[ok] A(n;x) = c_n B(n;x) B(n+1;x)"));
}

#[test]
fn verify_reports_each_check() {
    let o = squareice(&["verify", "ybe"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.starts_with("[ok] ybe/")), "{out}");
    let o = squareice(&["verify", "ik", "--n", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().count() > 1);
    let o = squareice(&["verify", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_output_order_is_fixed() {
    let a = squareice(&["--workers", "1", "verify", "cauchy,counting", "--n", "3"]);
    let b = squareice(&["--workers", "4", "verify", "cauchy,counting", "--n", "3"]);
    assert_eq!(stdout(&a), stdout(&b));
    let lines: Vec<String> = stdout(&a).lines().map(String::from).collect();
    let first_counting = lines.iter().position(|l| l.contains("counting/")).unwrap();
    assert!(lines[..first_counting].iter().all(|l| l.contains("cauchy/")));
}

#[test]
fn table_json_row() {
    let o = squareice(&["table", "--max-n", "4", "--format", "json"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().nth(2), Some(r#"{"n":3,"a1":"7","a2":"8","a3":"9","poly":["6","1"]}"#));
    let rows = parse_json_table(&out).unwrap();
    assert_eq!(rows.len(), 4);
}

#[test]
fn table_csv_round_trip_and_determinism() {
    let o = squareice(&["table", "--max-n", "8", "--format", "csv"]);
    let out = stdout(&o);
    assert!(out.starts_with(CSV_HEADER));
    let rows = parse_csv_table(&out).unwrap();
    let again: String = std::iter::once(format!("{CSV_HEADER}\n")).chain(rows.iter().map(|r| r.to_csv() + "\n")).collect();
    assert_eq!(again, out);
    let json = stdout(&squareice(&["table", "--max-n", "8", "--format", "json"]));
    assert_eq!(parse_json_table(&json).unwrap(), rows);
    assert_eq!(stdout(&squareice(&["table", "--max-n", "8", "--format", "csv"])), out);
}

#[test]
fn table_text_has_header() {
    let o = squareice(&["table", "--max-n", "3"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("n") && header.contains("A(n;2)") && header.ends_with("A(n;x)"));
    assert!(lines.nth(2).unwrap().ends_with("x + 6"));
    assert!(stderr(&o).contains("[ok] n=3 product formulas"));
    assert!(!out.contains('.'), "no floating point in output");
}

#[test]
fn enumerate_and_check_round_trip() {
    let o = squareice(&["enumerate", "--n", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.split("\n\n").count(), 42);
    let mut child = Command::new(env!("CARGO_BIN_EXE_squareice"))
        .args(["check-asm", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("matrices = 42"));
    // 2x^2 + 16x + 24 contributes 2·2 + 16 entries equal to −1.
    assert!(out.contains("entries equal to -1 = 20"));
}

#[test]
fn check_asm_names_the_violation() {
    let path = std::env::temp_dir().join(format!("squareice-bad-{}.txt", std::process::id()));
    std::fs::write(&path, "1 -1\n-1 1\n").unwrap();
    let o = squareice(&["check-asm", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("prefix sum"), "{}", stderr(&o));
}

#[test]
fn workers_env_must_be_a_number() {
    let o = Command::new(env!("CARGO_BIN_EXE_squareice"))
        .args(["count", "--n", "3"])
        .env("SQUAREICE_WORKERS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_squareice"))
        .args(["count", "--n", "3"])
        .env("SQUAREICE_WORKERS", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
}

#[test]
fn enumerate_ice_labels() {
    let o = squareice(&["enumerate", "--n", "2", "--ice"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let blocks: Vec<&str> = text.trim_end().split("\n\n").collect();
    assert_eq!(blocks.len(), 2);
    assert!(blocks.iter().all(|b| b.split_whitespace().filter(|l| *l == "1").count() == 2));
}
