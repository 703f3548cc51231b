use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn tileasm(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tileasm"))
        .current_dir(dir)
        .env_remove("TILEASM_OUT_DIR")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn emit_names_the_file_after_the_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let o = tileasm(dir.path(), &["12+6", "--emit"]);
    assert!(o.status.success());
    let text = fs::read_to_string(dir.path().join("add_8_tile_12,6.tiles")).unwrap();
    assert!(text.starts_with("% tileset add_8_tile_12,6\n"));
    assert!(text.contains("num tile types="));
}

#[test]
fn emit_is_byte_stable() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for d in [&a, &b] {
        assert!(tileasm(d.path(), &["6-12+4-2", "mod", "3", "--emit", "--manifest"]).status.success());
    }
    for f in ["mod_tile_6,-12,+4,-2,3.tiles", "mod_tile_6,-12,+4,-2,3.manifest"] {
        assert_eq!(fs::read(a.path().join(f)).unwrap(), fs::read(b.path().join(f)).unwrap(), "{f}");
    }
}

#[test]
fn out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_tileasm"))
        .current_dir(dir.path())
        .env("TILEASM_OUT_DIR", "out")
        .args(["5*4*3", "--emit"])
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(dir.path().join("out/mul_tile_5,4,3.tiles").is_file());
}

#[test]
fn simulate_prints_answers() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&[&str], &str); 6] = [
        (&["12+6+2+4", "--simulate"], "result=24\n"),
        (&["6+4+3+5", "--variant", "l", "--simulate"], "result=18\n"),
        (&["5*4*3", "--simulate"], "result=60\n"),
        (&["6-12+4-2", "--simulate"], "result=-4\nsign=-\n"),
        (&["6-12+4-2 mod 3", "--simulate"], "remainder=1\nsign=-\n"),
        (&["prime", "5", "--simulate"], "prime=yes\n"),
    ];
    for (args, want) in cases {
        let o = tileasm(dir.path(), args);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(stdout(&o), want, "{args:?}");
    }
}

#[test]
fn leading_minus_after_double_dash() {
    let dir = tempfile::tempdir().unwrap();
    let o = tileasm(dir.path(), &["--simulate", "--", "-5+3"]);
    assert_eq!(stdout(&o), "result=-2\nsign=-\n");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| tileasm(dir.path(), args).status.code();
    assert_eq!(code(&["5*4+3", "--simulate"]), Some(2));
    assert_eq!(code(&["12+6"]), Some(2));
    assert_eq!(code(&["5", "--simulate"]), Some(3));
    assert_eq!(code(&["prime", "1", "--simulate"]), Some(3));
    assert_eq!(code(&["12+6", "--simulate", "--max-steps", "3"]), Some(4));
    fs::write(dir.path().join("blocker"), "").unwrap();
    assert_eq!(code(&["12+6", "--emit", "--out-dir", "blocker/sub"]), Some(1));
}

#[test]
fn render_is_deterministic_and_cropped() {
    let dir = tempfile::tempdir().unwrap();
    for (file, extra) in [("full.txt", None), ("inner.txt", Some("--interior")), ("img.ppm", None)] {
        let mut args = vec!["12+6+2+4", "--simulate", "--render", file];
        args.extend(extra);
        assert!(tileasm(dir.path(), &args).status.success());
    }
    let full = fs::read_to_string(dir.path().join("full.txt")).unwrap();
    let inner = fs::read_to_string(dir.path().join("inner.txt")).unwrap();
    assert_eq!(full.lines().count(), 7);
    assert!(full.lines().all(|l| l.chars().count() == 9));
    assert!(inner.lines().all(|l| l.chars().count() == 7));
    assert!(fs::read(dir.path().join("img.ppm")).unwrap().starts_with(b"P6\n72 56\n255\n"));

    assert!(tileasm(dir.path(), &["12+6+2+4", "--simulate", "--render", "again.txt"]).status.success());
    assert_eq!(fs::read_to_string(dir.path().join("again.txt")).unwrap(), full);
}

#[test]
fn trace_replays_line_per_attachment() {
    let dir = tempfile::tempdir().unwrap();
    assert!(tileasm(dir.path(), &["12+6", "--simulate", "--trace", "t.txt"]).status.success());
    let trace = fs::read_to_string(dir.path().join("t.txt")).unwrap();
    assert!(trace.lines().count() > 10);
}
