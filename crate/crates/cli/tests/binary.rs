use std::path::PathBuf;
use std::process::{Command, Output};

use doubletorus_cli::parse_record;

fn sessions() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../sessions")
}

fn tool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_doubletorus")).args(args).output().expect("spawn binary")
}

fn run(file: &str, extra: &[&str]) -> Output {
    let path = sessions().join(file);
    let mut args = vec!["run", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    tool(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn elliptic_session() {
    let o = run("elliptic.dts", &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("cohomology L: h = [2, 0]\n"));
    assert!(out.contains("intersect: 4 points [0,0] [0,1/2] [1/2,0] [1/2,1/2]\n"));
    assert!(out.contains("intersect: empty\n"));
    assert!(out.contains("ext-check L L: hom = [1, 1], intersection dimension 2, Floer/Ext agreement holds\n"));
}

#[test]
fn surface_session_records() {
    let o = run("surface.dts", &["--records"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let records: Vec<_> = out.lines().map(|l| parse_record(l).expect("well-formed record")).collect();
    assert_eq!(records.len(), 12);
    for (line, rec) in out.lines().zip(&records) {
        assert_eq!(rec.to_string(), line);
    }
    assert_eq!(records[0].get("cmd"), Some("cohomology"));
    assert_eq!(records[2].get("h"), Some("[0,2,0]"));
}

#[test]
fn negative_verdicts_need_assert() {
    let o = run("tfold.dts", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("polarization T: not globally defined\n"));
    let o = run("tfold.dts", &["--assert"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 7: negative verdict"));
}

#[test]
fn input_errors_exit_two() {
    let o = run("bad_syntax.dts", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o), "line 2, column 26: syntax error: expected ',', found 'c'\n");
    assert!(o.stdout.is_empty());

    let o = run("bad_form.dts", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o), "line 2: E not alternating\n");

    let o = run("no_such_file.dts", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(tool(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(tool(&["run"]).status.code(), Some(2));
}

#[test]
fn non_utf8_input_exits_two() {
    let path = std::env::temp_dir().join(format!("doubletorus-{}.dts", std::process::id()));
    std::fs::write(&path, [0x74, 0x6f, 0xff, 0xfe]).unwrap();
    let o = tool(&["run", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not valid UTF-8"));
}

#[test]
fn selftest_passes() {
    let o = tool(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS [")).count(), 15);
    assert!(out.ends_with("15 passed, 0 failed\n"));
}
