use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mstable-psi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_prints_exact_and_scaled_values() {
    let o = run(&["compute", "--m", "3", "--tau", "t0^4 t5"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("value = -1/2\n"), "{out}");
    assert!(out.contains("scaled24 = -12\n"), "{out}");

    let o = run(&["compute", "--m", "2", "--d", "4,0,0,0"]);
    assert!(stdout(&o).contains("value = 0/1\n"));
}

#[test]
fn compute_rejects_bad_input() {
    let o = run(&["compute", "--m", "0", "--tau", "t1 *"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("at byte 4"));
    assert_eq!(
        run(&["compute", "--m", "3", "--d", "2,2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["compute", "--m", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn table_matches_golden() {
    let o = run(&["table", "--max-n", "6", "--scale24"]);
    assert!(o.status.success());
    let golden = include_str!("data/table_6_scaled.tsv");
    assert_eq!(stdout(&o), golden);

    let pretty = stdout(&run(&["table", "--max-n", "3", "--format", "pretty"]));
    assert!(pretty.lines().nth(1).unwrap().starts_with("-----"));
    assert!(pretty.contains("t0 t1 t2 = 1/12"));
}

#[test]
fn cache_file_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("values.cache");
    let p = path.to_str().unwrap();
    let first = run(&["compute", "--m", "4", "--d", "3,2,1,0,0,0", "--cache", p]);
    assert!(first.status.success());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.lines().any(|l| l == "4;3,2,1,0,0,0;2/1"), "{text}");
    let second = run(&["compute", "--m", "4", "--d", "3,2,1,0,0,0", "--cache", p]);
    assert_eq!(stdout(&first), stdout(&second));

    fs::write(&path, "# values\n4;3,2,1,0,0,0;2/1\n4;2,2;1/1\n").unwrap();
    let bad = run(&["compute", "--m", "4", "--d", "3,2,1,0,0,0", "--cache", p]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 3"));
}

#[test]
fn crosscheck_lists_every_route() {
    let o = run(&["crosscheck", "--n", "6", "--m", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 11);
    assert!(out
        .lines()
        .all(|l| l.ends_with("\tok") && l.contains("ViaReduction(3)")));
}

#[test]
fn oracle_compares_both_computations() {
    let o = run(&[
        "oracle",
        "--variant",
        "a",
        "--blocks",
        "3",
        "--block-d",
        "0,0,0",
        "--m",
        "1",
        "--d",
        "4",
        "--c0",
        "1/24",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("deg_Z = -1/24"), "{out}");
    assert!(out.contains("closed_form = -1/24"), "{out}");

    let o = run(&[
        "oracle",
        "--variant",
        "c",
        "--blocks",
        "2,3",
        "--block-d",
        "0,0;1,0,0",
        "--m",
        "3",
        "--d",
        "5",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));

    let mismatch = run(&[
        "oracle",
        "--variant",
        "a",
        "--blocks",
        "3",
        "--block-d",
        "0,0,0",
        "--m",
        "1",
        "--d",
        "3",
    ]);
    assert_eq!(mismatch.status.code(), Some(2));
    let sizes = run(&[
        "oracle",
        "--variant",
        "b",
        "--blocks",
        "2",
        "--block-d",
        "0,0,0",
        "--m",
        "2",
        "--d",
        "4",
    ]);
    assert_eq!(sizes.status.code(), Some(2));
}

#[test]
fn verify_reports_each_suite() {
    let o = run(&["verify", "--lemmas", "--paths", "--max-n", "5"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 6);
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn help_and_version_exit_cleanly() {
    assert!(run(&["--help"]).status.success());
    assert!(run(&["--version"]).status.success());
    assert!(stdout(&run(&["compute", "--help"])).contains("--tau"));
}
