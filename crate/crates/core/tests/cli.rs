use std::io::Write;
use std::process::{Command, Output};

use schubert_flag::{CartanType, SchubertCalculus, SchubertExpansion};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert-flag")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_f4_exits_zero() {
    let o = bin(&["verify", "--type", "F4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(", 0 failed"));
}

#[test]
fn corrupted_table_exits_one() {
    let dump = bin(&["verify", "--dump-tables"]);
    assert_eq!(dump.status.code(), Some(0));
    let mut tables: serde_json::Value = serde_json::from_slice(&dump.stdout).unwrap();
    let entry = &mut tables["f4"]["c3_deltas"]["243"];
    assert_eq!(entry.as_i64(), Some(-4));
    *entry = serde_json::json!(-3);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(tables.to_string().as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();
    let o = bin(&["verify", "--type", "F4", "--tables", path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));

    // The untouched dump verifies.
    let mut clean = tempfile::NamedTempFile::new().unwrap();
    clean.write_all(&dump.stdout).unwrap();
    let o = bin(&["verify", "--type", "G2", "--tables", clean.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["expand", "--type", "G2", "--expr", "w1 +* w2"][..],
        &["expand", "--type", "G2", "--expr", "t4"],
        &["expand", "--type", "E8", "--expr", "w1"],
        &["basis", "--type", "B"],
        &["basis", "--type", "D", "--rank", "3"],
        &["giambelli", "--type", "G2", "--word", "13"],
        &["chow", "--type", "F4", "--variant", "so"],
        &["verify", "--type", "F4", "--tables", "/nonexistent/tables.json"],
        &["frobnicate"],
        &["basis", "--type", "G2", "--format", "yaml"],
    ] {
        let o = bin(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn basis_g2_codim_3() {
    let o = bin(&["basis", "--type", "G2", "--codim", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["strata"][0]["words"], serde_json::json!(["121", "212"]));
}

#[test]
fn expand_json_round_trips_byte_identical() {
    let expr = "t1*t2*t3*t4 - 2*t*(t1*t2*t3 + t1*t2*t4 + t1*t3*t4 + t2*t3*t4) + 8*t^4";
    let o = bin(&["expand", "--type", "F4", "--expr", expr, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let calc = SchubertCalculus::new(CartanType::f4());
    let e = SchubertExpansion::from_json(calc.group(), &serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(e.len(), 6);
    assert_eq!(serde_json::to_string_pretty(&e.to_json()).unwrap() + "\n", text);
}

#[test]
fn words_are_evaluated() {
    // 211 is not reduced; it evaluates to s_2.
    let o = bin(&["giambelli", "--type", "G2", "--word", "211"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("P_2 (from 211) = w2"), "{}", stdout(&o));
    let o = bin(&["delta", "--type", "G2", "--expr", "t1*t2*t3", "--word", "121"]);
    assert_eq!(stdout(&o).trim(), "Delta_121 = -2");
}

#[test]
fn structconst_and_chevalley() {
    let o = bin(&["structconst", "--type", "G2", "--u", "1", "--v", "1"]);
    assert_eq!(stdout(&o).trim(), "Z_1 * Z_1 = Z_21");
    let o = bin(&["chevalley", "--type", "B", "--rank", "3", "--u", "23", "--v", "2"]);
    assert_eq!(stdout(&o).trim(), "Z_2 * Z_23 = Z_123 + Z_232 + 2*Z_323");
}

#[test]
fn chow_reports_strata() {
    let o = bin(&["chow", "--type", "G2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["strata"][3]["factors"], serde_json::json!(["2"]));
    assert_eq!(v["presentation"]["text"], "Z[X3]/(2X3, X3^2)");
}
