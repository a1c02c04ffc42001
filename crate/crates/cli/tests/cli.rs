use std::process::{Command, Output};

use qduality::qfunctions::{char_table, CharTable, TableKind};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qduality")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn chartable_prints_the_table() {
    let o = run(&["chartable", "--k", "3", "--kind", "phi"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("# qduality chartable k=3 kind=phi seed=0"));
    let rows: Vec<&str> = text.lines().skip(2).map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(rows, ["(3)", "(2,1)"]);

    let o = run(&["chartable", "--k", "2", "--kind", "psi", "--format", "records"]);
    let table = CharTable::from_records(&stdout(&o)).unwrap();
    assert_eq!(table.entries, vec![vec![qduality::FieldElem::from_int(4)]]);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["chartable", "--k", "0", "--kind", "phi"]).status.code(), Some(2));
    assert_eq!(run(&["chartable", "--k", "3", "--kind", "chi"]).status.code(), Some(2));
    assert_eq!(run(&["duality", "--n", "0", "--k", "2"]).status.code(), Some(2));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let first = run(&["chartable", "--k", "5", "--kind", "psi", "--cache-dir", cache]);
    assert_eq!(first.status.code(), Some(0));
    let path = dir.path().join("chartable_k5_psi.txt");
    let cached = CharTable::from_records(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(cached, char_table(5, TableKind::Psi));
    let second = run(&["chartable", "--k", "5", "--kind", "psi", "--cache-dir", cache]);
    assert_eq!(stdout(&first), stdout(&second));

    // A file holding the wrong table is refused.
    std::fs::write(dir.path().join("chartable_k4_phi.txt"), char_table(3, TableKind::Phi).to_records()).unwrap();
    let o = run(&["chartable", "--k", "4", "--kind", "phi", "--cache-dir", cache]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn presentation_reports_relations() {
    let o = run(&["presentation", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(tau*sigma1)^4=-1 PASS"));
    let o = run(&["presentation", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("CHECK presentation k=1 tau^2=1 PASS"));
    assert_eq!(run(&["presentation", "--k", "4"]).status.code(), Some(0));
}

#[test]
fn injected_sign_fault_is_caught() {
    let o = run(&["--inject-sign-fault", "presentation", "--k", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["--inject-sign-fault", "verify-all", "--kmax", "4", "--nmax", "1", "--fail-fast"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn duality_runs_and_guards() {
    let o = run(&["duality", "--n", "1", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SUMMARY"));
    let o = run(&["duality", "--n", "3", "--k", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--force"));
}

#[test]
fn empty_range_has_zero_checks() {
    let o = run(&["verify-all", "--kmax", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 checks"));
}

#[test]
fn reports_are_byte_stable() {
    let args = ["--seed", "11", "verify-all", "--kmax", "3", "--nmax", "1", "--points", "1"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).starts_with("# qduality verify-all kmax=3 nmax=1 seed=11"));
    assert_eq!(a.stdout, b.stdout);
}
