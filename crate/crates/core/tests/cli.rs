//! End-to-end runs of the `kakeya` binary.

use std::path::Path;
use std::process::{Command, Output};

fn kakeya(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kakeya")).args(args).output().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_then_recognize() {
    let dir = tempfile::tempdir().unwrap();
    for (variant, k, expect) in [("regulus-split", "2", "\"RegulusSplit\""), ("secant", "1", "\"SecantVariant\"")] {
        let file = dir.path().join(format!("{variant}.json"));
        let o = kakeya(&["construct", "--q", "5", "--k", k, "--variant", variant, "--out", path(&file)]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let o = kakeya(&["recognize", "--in", path(&file)]);
        assert_eq!(o.status.code(), Some(0));
        let text = String::from_utf8(o.stdout).unwrap();
        assert!(text.contains(expect), "{text}");
        assert!(text.contains(&format!("\"k\":{k}")), "{text}");
    }
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let runs: Vec<Vec<&str>> = vec![
        vec!["construct", "--p", "2", "--deg", "3", "--k", "3", "--variant", "secant", "--secant-index", "1"],
        vec!["graphs", "--n", "5", "--filter", "edge-disjoint"],
        vec!["field-table", "--q", "9"],
    ];
    for args in runs {
        let a = dir.path().join("a");
        let b = dir.path().join("b");
        for f in [&a, &b] {
            let mut v = args.clone();
            if v[0] != "field-table" {
                v.extend(["--out", path(f)]);
                assert_eq!(kakeya(&v).status.code(), Some(0), "{v:?}");
            } else {
                std::fs::write(f, kakeya(&v).stdout).unwrap();
            }
        }
        let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
        assert!(!x.is_empty());
        assert_eq!(x, y, "{args:?}");
    }
}

#[test]
fn graphs_csv_has_one_row_per_class() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.csv");
    let o = kakeya(&["graphs", "--n", "4", "--out", path(&file)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8(o.stdout).unwrap().starts_with("11 graphs"));
    let text = std::fs::read_to_string(&file).unwrap();
    // 11 graphs on four vertices, plus a header
    assert_eq!(text.lines().count(), 12, "{text}");
}

#[test]
fn verify_small_q_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cert.json");
    let o = kakeya(&["verify", "--q", "3", "--out", path(&file)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&file).unwrap()).unwrap();
    assert_eq!(v["theorem"]["verified"], true);
    assert_eq!(v["remark"]["verified"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(kakeya(&["construct", "--q", "6", "--k", "0", "--variant", "secant"]).status.code(), Some(2));
    assert_eq!(kakeya(&["construct", "--q", "5", "--k", "9", "--variant", "regulus-split"]).status.code(), Some(2));
    assert_eq!(kakeya(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(kakeya(&["classify", "--q", "7"]).status.code(), Some(3));
    assert_eq!(kakeya(&["graphs", "--n", "40"]).status.code(), Some(3));
    assert_eq!(kakeya(&["recognize", "--in", "/nonexistent/file.json"]).status.code(), Some(2));
}
