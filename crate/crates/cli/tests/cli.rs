use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data").join(name)
}

fn fence(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fence"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn hopf_invariants() {
    let out = fence(&["invariants", &path("hopf.fence")]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in ["annulus=true", "lk=1", "tb=-1", "rot=0", "rot_abs=0"] {
        assert!(text.lines().any(|l| l == line), "{line} missing from\n{text}");
    }
}

#[test]
fn rotation_classes_are_separated() {
    let out = fence(&["search", &path("a3_rot0.fence"), &path("a3_rot2.fence")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("verdict=NotRelatedByInvariant(rot_abs)\n"));
}

#[test]
fn search_finds_twirl() {
    let dir = tempfile::tempdir().unwrap();
    let twirled = dir.path().join("twirled.fence");
    let out = fence(&["move", "--kind", "twirl", &path("a3_rot0.fence")]);
    assert!(out.status.success());
    std::fs::write(&twirled, &out.stdout).unwrap();
    let out = fence(&["search", &path("a3_rot0.fence"), twirled.to_str().unwrap()]);
    let text = stdout(&out);
    assert!(text.starts_with("verdict=Related\nsteps=1\n"), "{text}");
}

#[test]
fn inapplicable_move_exits_2() {
    let out = fence(&["move", "--kind", "slip", "--at", "1", &path("hopf.fence")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn reducing_disconnected_surface_exits_2() {
    let out = fence(&["reduce", &path("disks.fence")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.fence");
    std::fs::write(&bad, "fence 1\nstrands 2\nbands 1-3\n").unwrap();
    let out = fence(&["invariants", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(fence(&["invariants", "/nonexistent"]).status.code(), Some(1));
    assert_eq!(fence(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(fence(&["--help"]).status.code(), Some(0));
}

#[test]
fn svg_is_well_formed() {
    for cusped in [false, true] {
        let mut args = vec!["render", "--format", "svg"];
        if cusped {
            args.push("--cusped");
        }
        let file = path("a3_rot2.fence");
        args.push(&file);
        let out = fence(&args);
        assert!(out.status.success());
        let text = stdout(&out);
        let doc = roxmltree::Document::parse(&text).expect("well-formed");
        assert_eq!(doc.root_element().tag_name().name(), "svg");
    }
}

#[test]
fn hopf_ascii_layout() {
    let out = fence(&["render", &path("hopf.fence")]);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.iter().filter(|r| r.starts_with('-')).count(), 2);
    let bars = rows[1].chars().filter(|&c| c == '|').count();
    assert_eq!(bars, 2);
}

#[test]
fn front_converts_to_fence() {
    let out = fence(&["from-front", &path("rectangle.front")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("fence 1\n"), "{text}");
}

#[test]
fn classify_lk_one() {
    let out = fence(&["classify", "--lk", "1", "--max-strands", "3", "--max-bands", "3"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1, "{text}");
    assert!(text.starts_with("rot_abs=0 tb=-1 "), "{text}");
}

#[test]
fn oracle_values() {
    let text = stdout(&fence(&["oracle", "--check", "lk", &path("hopf.fence")]));
    assert_eq!(text, "lk=1\n");
    let text = stdout(&fence(&[
        "oracle",
        "--check",
        "gate",
        &path("a3_rot0.fence"),
        &path("a3_rot2.fence"),
    ]));
    assert_eq!(text, "gate=pass\n");
}
