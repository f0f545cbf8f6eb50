//! End-to-end tests driving the `artin` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn artin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_artin"))
}

fn run(args: &[&str], cwd: &Path) -> Output {
    artin()
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn write_json(dir: &Path, name: &str, value: &Value) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string_pretty(value).unwrap()).unwrap();
    path
}

fn m3_frame() -> Value {
    json!({
        "format_version": 1,
        "name": "m3",
        "elements": ["0", "a", "b", "c", "1"],
        "leq": [["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]
    })
}

fn id_c2_map() -> Value {
    json!({
        "format_version": 1,
        "dom": "C2",
        "cod": "C2",
        "map": {"0": "0", "1": "1"}
    })
}

fn top_c2_map() -> Value {
    json!({
        "format_version": 1,
        "dom": "C2",
        "cod": "C2",
        "map": {"0": "1", "1": "1"}
    })
}

#[test]
fn validate_catalog_frame_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["validate", "C3"], dir.path());
    assert!(out.status.success(), "{out:?}");
}

#[test]
fn validate_m3_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_json(dir.path(), "m3.json", &m3_frame());
    let out = run(&["validate", path.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("distributivity"), "missing witness: {text}");
}

#[test]
fn malformed_json_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = run(&["validate", path.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn glue_identity_map_gives_three_chain() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_json(dir.path(), "id_C2.json", &id_c2_map());
    let out = run(&["glue", path.to_str().unwrap()], dir.path());
    assert!(out.status.success(), "{out:?}");
    let frame: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(frame["elements"].as_array().unwrap().len(), 3);
    assert_eq!(frame["name"], "Gl(id_C2)");

    // the emitted frame file re-imports cleanly
    let emitted = write_json(dir.path(), "carrier.json", &frame);
    let out = run(&["validate", emitted.to_str().unwrap()], dir.path());
    assert!(out.status.success(), "{out:?}");
}

#[test]
fn enumerate_extensions_counts() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["enumerate-extensions", "C2", "C2"], dir.path());
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in lines {
        let map: Value = serde_json::from_str(line).unwrap();
        assert_eq!(map["dom"], "C2");
        assert_eq!(map["cod"], "C2");
    }
}

#[test]
fn enumerate_extensions_respects_size_guard() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &["--max-frame-size", "2", "enumerate-extensions", "B3", "C2"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn classify_boolean_square_atom() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["classify", "B2", "a"], dir.path());
    assert!(out.status.success(), "{out:?}");
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    // the characteristic map of (B2, a) is the constant-top map
    let alpha = doc["alpha"]["map"].as_object().unwrap();
    assert!(alpha.values().all(|v| v == "1"));
    assert_eq!(doc["carrier"]["elements"].as_array().unwrap().len(), 4);

    let unknown = run(&["classify", "B2", "zz"], dir.path());
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn check_extension_verifies_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let catalog_dir = dir.path().join("frames");
    std::fs::create_dir(&catalog_dir).unwrap();
    write_json(
        &catalog_dir,
        "up_a.json",
        &json!({
            "format_version": 1,
            "name": "upA",
            "elements": ["a", "1"],
            "leq": [["a", "1"]]
        }),
    );
    write_json(
        &catalog_dir,
        "down_a.json",
        &json!({
            "format_version": 1,
            "name": "downA",
            "elements": ["0", "a"],
            "leq": [["0", "a"]]
        }),
    );
    let kernel = write_json(
        dir.path(),
        "kernel.json",
        &json!({
            "format_version": 1,
            "dom": "upA",
            "cod": "B2",
            "map": {"a": "a", "1": "1"}
        }),
    );
    let cokernel = write_json(
        dir.path(),
        "cokernel.json",
        &json!({
            "format_version": 1,
            "dom": "B2",
            "cod": "downA",
            "map": {"0": "0", "a": "a", "b": "0", "1": "a"}
        }),
    );
    let section = write_json(
        dir.path(),
        "section.json",
        &json!({
            "format_version": 1,
            "dom": "downA",
            "cod": "B2",
            "map": {"0": "b", "a": "1"}
        }),
    );
    let catalog_arg = catalog_dir.to_str().unwrap().to_string();
    let out = run(
        &[
            "--catalog",
            &catalog_arg,
            "check-extension",
            "--kernel",
            kernel.to_str().unwrap(),
            "--cokernel",
            cokernel.to_str().unwrap(),
            "--section",
            section.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{out:?}");

    // corrupt the section: constant top no longer splits the cokernel
    let bad_section = write_json(
        dir.path(),
        "bad_section.json",
        &json!({
            "format_version": 1,
            "dom": "downA",
            "cod": "B2",
            "map": {"0": "1", "a": "1"}
        }),
    );
    let out = run(
        &[
            "--catalog",
            &catalog_arg,
            "check-extension",
            "--kernel",
            kernel.to_str().unwrap(),
            "--cokernel",
            cokernel.to_str().unwrap(),
            "--section",
            bad_section.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    assert!(stdout(&out).contains("fail"));
}

#[test]
fn pullback_and_pushout_emit_composites() {
    let dir = tempfile::tempdir().unwrap();
    let alpha = write_json(dir.path(), "alpha.json", &id_c2_map());
    let top = write_json(dir.path(), "f.json", &top_c2_map());

    let out = run(
        &[
            "pullback",
            alpha.to_str().unwrap(),
            top.to_str().unwrap(),
            "--verify",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{out:?}");
    let map: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(map["map"]["0"], "1", "id ∘ ⊤ is the top map");

    let out = run(
        &[
            "pushout",
            alpha.to_str().unwrap(),
            top.to_str().unwrap(),
            "--verify",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{out:?}");
    let map: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(map["map"]["0"], "1", "⊤ ∘ id is the top map");
}

#[test]
fn baer_meet_of_id_and_top_is_id() {
    let dir = tempfile::tempdir().unwrap();
    let alpha = write_json(dir.path(), "alpha.json", &id_c2_map());
    let beta = write_json(dir.path(), "beta.json", &top_c2_map());
    let out = run(
        &[
            "baer-meet",
            alpha.to_str().unwrap(),
            beta.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{out:?}");
    let map: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(map["map"]["0"], "0");
    assert_eq!(map["map"]["1"], "1");
}

#[test]
fn export_dot_draws_covers() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["export-dot", "C3"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"0\" -> \"1\""));
    assert!(!text.contains("\"0\" -> \"2\""));
}

#[test]
fn closed_pipe_does_not_panic() {
    use std::io::Read;
    use std::process::Stdio;

    let mut child = artin()
        .args(["enumerate-extensions", "C3", "C3"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // read one byte, then close the pipe while the child may still be writing
    let mut stdout = child.stdout.take().unwrap();
    let mut byte = [0u8; 1];
    let _ = stdout.read(&mut byte);
    drop(stdout);
    child.wait().unwrap();
    let mut err = String::new();
    child.stderr.take().unwrap().read_to_string(&mut err).unwrap();
    assert!(!err.contains("panicked"), "stderr: {err}");
}

#[test]
fn check_laws_passes_and_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "check-laws",
        "--classification-max",
        "4",
        "--universal-max",
        "4",
        "--schreier-max",
        "4",
        "--bifunctor-max",
        "3",
    ];
    let first = run(&args, dir.path());
    assert!(first.status.success(), "{first:?}");
    for line in stdout(&first).lines() {
        let report: Value = serde_json::from_str(line).unwrap();
        assert_eq!(report["verdict"], "pass", "{line}");
    }
    let second = run(&args, dir.path());
    assert_eq!(stdout(&first), stdout(&second), "output must be stable");
}
