//! Golden-file reproduction: every fixture under tests/golden is rebuilt
//! from scratch through the CLI and must match byte for byte, and every
//! fixture loads and re-saves identically.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn golden(name: &str) -> String {
    fs::read_to_string(golden_dir().join(name)).unwrap()
}

fn run(dir: &Path, args: &[&str]) {
    let out = Command::new(env!("CARGO_BIN_EXE_filippov"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "{args:?} failed:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn pipeline_rebuilds_every_fixture_byte_for_byte() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    run(dir, &["simple", "3", "--out", "a4.json"]);
    run(dir, &["simple", "2", "--out", "so3.json"]);
    run(dir, &["contract", "a4.json", "--i0", "1,2", "--out", "a4c.json"]);
    run(dir, &["contract", "so3.json", "--i0", "3", "--out", "e2.json"]);
    run(dir, &["induce", "a4.json", "--out", "lie_a4.json"]);
    run(dir, &["induce", "a4c.json", "--out", "lie_a4c.json"]);
    run(dir, &["ww", "lie_a4.json", "--i0", "1,2", "--out", "ww_lie_a4.json"]);
    run(dir, &["iw", "lie_a4.json", "--indices", "3,5,6", "--out", "iw_e3.json"]);
    run(dir, &["quotient", "ww_lie_a4.json", "--coords", "6", "--out", "ww_quotient.json"]);

    let mut checked = 0;
    for entry in fs::read_dir(golden_dir()).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        let rebuilt = fs::read_to_string(dir.join(&name))
            .unwrap_or_else(|_| panic!("{name} was not rebuilt"));
        assert_eq!(rebuilt, golden(&name), "fixture {name} drifted");
        checked += 1;
    }
    assert_eq!(checked, 9);
}

#[test]
fn fixtures_load_and_resave_identically() {
    use filippov::io;
    for entry in fs::read_dir(golden_dir()).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        let text = golden(&name);
        let resaved = if text.contains("\"basis_words\"") {
            io::induced_to_json(&io::induced_from_json(&text).unwrap())
        } else {
            io::algebra_to_json(&io::algebra_from_json(&text).unwrap())
        };
        assert_eq!(resaved, text, "round trip of {name}");
    }
}

#[test]
fn quotient_of_the_graded_contraction_matches_the_contracted_induced_algebra() {
    use filippov::io;
    let q = io::algebra_from_json(&golden("ww_quotient.json")).unwrap();
    let target = io::induced_from_json(&golden("lie_a4c.json")).unwrap();
    assert_eq!(q, target.lie.to_filippov());
}
