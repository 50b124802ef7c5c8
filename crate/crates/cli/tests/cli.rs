use std::process::{Command, Output};

use nilp2_core::formmodule::Symbol;
use nilp2_core::Matrix;
use serde_json::Value;

fn nilp2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilp2"))
        .args(args)
        .env_remove("NILP2_FIELD_TABLE")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_b2() {
    let o = nilp2(&["count", "--family", "B", "--rank", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5\nsymbol_census=5 agreement=true\n");
    let o = nilp2(&[
        "count", "--family", "SOplus", "--rank", "4", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["orbit_count"], 13);
    assert_eq!(v["agreement"], true);
}

#[test]
fn invalid_symbol_is_rejected() {
    let o = nilp2(&["build", "--symbol", "(3)_3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("condition (iv) violated"));
    let o = nilp2(&["build", "--symbol", "(3)_2^2(1)_1", "--mask", "11"]);
    assert_eq!(o.status.code(), Some(2));
    let o = nilp2(&["build", "--symbol", "not a symbol"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_flags_exit_two() {
    assert_eq!(
        nilp2(&["count", "--family", "E8", "--rank", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        nilp2(&["oracle", "--kind", "plus", "--dim", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        nilp2(&["oracle", "--kind", "odd", "--dim", "3", "--q", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        nilp2(&["weyl", "--type", "B", "--rank", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn oracle_so4_plus() {
    let o = nilp2(&[
        "oracle", "--kind", "plus", "--dim", "4", "--q", "2", "--group", "SO",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["totals"]["orbits"], 4);
    assert_eq!(v["verdict"]["pass"], true);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        ["kind", "N", "q", "group", "field", "symbols", "totals", "verdict"]
    );
}

#[test]
fn oracle_capacity() {
    let o = nilp2(&["oracle", "--kind", "odd", "--dim", "5", "--cap", "8"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2^10"));
}

#[test]
fn output_is_deterministic() {
    let args = ["oracle", "--kind", "minus", "--dim", "6", "--workers", "3"];
    let a = nilp2(&args);
    let b = nilp2(&["oracle", "--kind", "minus", "--dim", "6"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        nilp2(&["symbols", "--dim", "8"]).stdout,
        nilp2(&["symbols", "--dim", "8"]).stdout
    );
}

#[test]
fn printed_symbols_reparse() {
    for format in ["tsv", "json"] {
        let o = nilp2(&["symbols", "--dim", "9", "--format", format]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        let symbols: Vec<String> = if format == "tsv" {
            text.lines()
                .skip(1)
                .map(|l| l.split('\t').next().unwrap().to_string())
                .collect()
        } else {
            text.lines()
                .map(|l| {
                    serde_json::from_str::<Value>(l).unwrap()["symbol"]
                        .as_str()
                        .unwrap()
                        .to_string()
                })
                .collect()
        };
        assert!(!symbols.is_empty());
        for s in symbols {
            assert_eq!(s.parse::<Symbol>().unwrap().to_string(), s);
        }
    }
}

#[test]
fn build_round_trips() {
    let o = nilp2(&[
        "build",
        "--symbol",
        "(3)_2^2(1)_1",
        "--q",
        "4",
        "--mask",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["round_trip"], true);
    assert_eq!(v["blocks"], serde_json::json!(["D(1)", "Wd_2(3)"]));
    assert_eq!(v["kind"], "odd");
    let t: nilp2_core::quadspace::MatrixJson = serde_json::from_value(v["T"].clone()).unwrap();
    let t: Matrix = t.to_matrix().unwrap();
    assert_eq!(t.rows(), 7);
}

#[test]
fn weyl_and_springer() {
    assert_eq!(
        stdout(&nilp2(&["weyl", "--type", "C", "--rank", "3"])),
        "10\n"
    );
    let o = nilp2(&["springer-check", "--type", "D", "--rank", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        (
            v["weyl_irreps"].as_u64(),
            v["local_systems"].as_u64(),
            v["pass"].as_bool()
        ),
        (Some(13), Some(13), Some(true))
    );
}

#[test]
fn field_table_override() {
    // x^2 + x + 1 is the only irreducible quadratic; an alternative cubic
    let o = Command::new(env!("CARGO_BIN_EXE_nilp2"))
        .args(["build", "--symbol", "(1)_1^3", "--q", "8"])
        .env("NILP2_FIELD_TABLE", "3=d")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["field"], "q=2^3,mod=d");
    let o = Command::new(env!("CARGO_BIN_EXE_nilp2"))
        .args(["build", "--symbol", "(1)_1^3"])
        .env("NILP2_FIELD_TABLE", "3=f")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
