use std::path::PathBuf;
use std::process::{Command, Output};

use codelat::fixtures::crt_with_dual;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", &format!("{name}.code")].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_codelat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}\n{}\n{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn build_then_reload_golay() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("golay.lat");
    let out_s = out.to_str().unwrap();
    ok(&["build", "--family", "A", "--n", "1", "--code", &fixture("golay24"), "--out", out_s]);
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("denominator 1\n"));
    assert_eq!(text.lines().count(), 1 + 24);
    let check = ok(&["check", "--family", "A", "--n", "1", "--lattice", out_s]);
    assert!(check.contains("even unimodular: true"));
    assert!(check.contains("self-dual: true"));
    assert_eq!(ok(&["identify", "--family", "A", "--n", "1", "--lattice", out_s]), "24A1\n");
}

#[test]
fn build_tetracode_over_e6() {
    let dump = ok(&["build", "--family", "E", "--n", "6", "--code", &fixture("tetracode4")]);
    assert_eq!(dump.lines().count(), 1 + 24);
    assert_eq!(ok(&["identify", "--family", "E", "--n", "6", "--code", &fixture("tetracode4")]), "4E6\n");
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.code");
    std::fs::write(&empty, "ring Z2\nlength 0\ngenerators\n").unwrap();
    let o = run(&["build", "--family", "A", "--n", "1", "--code", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("length"));
    assert_eq!(run(&["build", "--family", "Q", "--n", "1", "--code", "x"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--family", "D", "--n", "4", "--ring", "Z9", "--m", "1"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--family", "A", "--n", "1", "--code", "/nonexistent.code"]).status.code(), Some(2));
    // Gamma_C over A1 has the wrong ring for a ternary code.
    assert_eq!(run(&["check", "--family", "A", "--n", "1", "--code", &fixture("tetracode4")]).status.code(), Some(2));
}

#[test]
fn check_reports() {
    let golay = ok(&["check", "--family", "A", "--n", "1", "--code", &fixture("golay24")]);
    assert!(golay.contains("even unimodular: true"));
    assert!(golay.contains("[Type II] AGREE"));
    assert!(golay.contains("theorem: agree"));
    let zero = ok(&["check", "--family", "A", "--n", "2", "--m", "1"]);
    assert!(zero.contains("integral: true"));
    assert!(zero.contains("unimodular: false"));
    let hexa = ok(&["check", "--family", "D", "--n", "4", "--ring", "F4", "--code", &fixture("hexacode6")]);
    assert!(hexa.contains("Hermitian"), "{hexa}");
    assert!(hexa.contains("theorem: agree"));
}

#[test]
fn identify_labels() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("crt2.code");
    std::fs::write(&p, crt_with_dual("c2").unwrap().to_text()).unwrap();
    let label = ok(&["identify", "--family", "D", "--n", "12", "--ring", "F2xF2", "--code", p.to_str().unwrap()]);
    assert_eq!(label, "D24\n");
    assert_eq!(ok(&["identify", "--family", "E", "--n", "8", "--m", "3"]), "3E8\n");
    let full = dir.path().join("full.code");
    std::fs::write(&full, "ring Z2\nlength 1\ngenerators\n1\n").unwrap();
    let odd = run(&["identify", "--family", "A", "--n", "1", "--code", full.to_str().unwrap()]);
    assert_eq!(odd.status.code(), Some(2));
}

#[test]
fn oracles_pass() {
    for args in [
        ["oracle", "--family", "A", "--n", "3", "--m", "1"].as_slice(),
        &["oracle", "--family", "D", "--n", "6", "--ring", "F2u", "--m", "1"],
        &["oracle", "--family", "E", "--n", "7", "--m", "2"],
    ] {
        assert!(ok(args).contains(": pass ("));
    }
}

#[test]
fn theta_of_e8() {
    assert_eq!(ok(&["theta", "--family", "E", "--n", "8", "--m", "1", "--bound", "4"]), "0 1\n2 240\n4 2160\n");
}

#[test]
fn tables_are_deterministic_and_flag_the_d8_row() {
    let a = run(&["tables"]);
    let b = run(&["tables"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.lines().any(|l| l.contains("G24") && l.contains("24A1") && l.ends_with("MATCH")));
    for row in ["CRT(C6,1)", "CRT(C6,2)", "CRT(C6,3)", "CRT(C6,4)"] {
        assert!(text.lines().any(|l| l.contains(row) && l.ends_with(" MATCH")), "{row}");
    }
    assert!(text.lines().filter(|l| l.contains("SKIP")).all(|l| l.contains("generator matrix not shipped")));
    // The expected D24 for CRT(C3,3) over D8 cannot be reproduced; see the
    // acceptance suite for the argument.
    let mismatches: Vec<&str> = text.lines().filter(|l| l.ends_with("MISMATCH")).collect();
    assert_eq!(mismatches.len(), 1);
    assert!(mismatches[0].contains("CRT(C3,3)") && mismatches[0].contains("3D8"));
    assert_eq!(a.status.code(), Some(1));
}

#[test]
fn hilbert_commands() {
    let v = ok(&["hilbert", "verify", "--field", "zeta8", "--code", &fixture("f2u_u"), "--trace-bound", "8"]);
    assert!(v.ends_with("identity holds\n"));
    let v = ok(&["hilbert", "verify", "--field", "zeta9", "--code", &fixture("tetracode4"), "--trace-bound", "2"]);
    assert!(v.contains("identity holds"));
    for field in ["zeta8", "zeta9"] {
        assert!(ok(&["hilbert", "level", "--field", field]).contains("MATCH"));
    }
    let l = ok(&["hilbert", "level", "--field", "zeta8", "--code", &fixture("f2u_pair")]);
    assert!(l.contains("unit ideal: true"));
    assert_eq!(run(&["hilbert", "level", "--field", "zeta7"]).status.code(), Some(2));
}
