//! Exit-code contract of the `corep` binary: 0 = success, 1 = unreadable
//! input, 2 = axiom violations, 3 = non-split base field, 4 = missing dual
//! Chevalley property.

use std::path::Path;
use std::process::Command;

fn corep() -> Command {
    Command::new(env!("CARGO_BIN_EXE_corep"))
}

fn golden(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

#[test]
fn validate_accepts_a_well_formed_hopf_file() {
    let out = corep().arg("validate").arg(golden("h16.json")).output().expect("runs");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("valid"), "got: {text}");
}

#[test]
fn unreadable_input_exits_1() {
    let tmp = tempfile::tempdir().expect("tempdir");
    let path = tmp.path().join("truncated.json");
    let full = std::fs::read_to_string(golden("sweedler.json")).expect("golden");
    std::fs::write(&path, &full[..full.len() / 2]).expect("write");
    let out = corep().arg("validate").arg(&path).output().expect("runs");
    assert_eq!(out.status.code(), Some(1));

    let out = corep().arg("analyze").arg(tmp.path().join("missing.json")).output().expect("runs");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn axiom_violations_exit_2_and_name_the_cells() {
    // Scale one comultiplication cell of the Sweedler fixture (the g⊗x term
    // of Δ(x)) so that coassociativity breaks while the file still parses.
    let tmp = tempfile::tempdir().expect("tempdir");
    let path = tmp.path().join("perturbed.json");
    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(golden("sweedler.json")).expect("golden"))
            .expect("parses");
    let cell = doc["comul"]
        .as_array_mut()
        .expect("comul array")
        .iter_mut()
        .find(|cell| cell[0] == 2 && cell[1] == 1 && cell[2] == 2)
        .expect("the (2,1,2) cell exists");
    cell[3] = serde_json::json!(["2"]);
    std::fs::write(&path, serde_json::to_string(&doc).expect("serializes")).expect("write");

    let out = corep().arg("validate").arg(&path).output().expect("runs");
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("coassociativity"), "got: {text}");
}

#[test]
fn non_split_field_exits_3() {
    // The dual of kZ4 over Q: the minimal polynomial of the order-4
    // character splits only after adjoining i.
    let tmp = tempfile::tempdir().expect("tempdir");
    let path = tmp.path().join("z4dual.json");
    let out = corep()
        .args(["demo", "dualgroup", "--group", "z4", "--out"])
        .arg(&path)
        .output()
        .expect("runs");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let out = corep().arg("analyze").arg(&path).output().expect("runs");
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8_lossy(&out.stderr);
    assert!(text.contains("NON_SPLIT"), "got: {text}");
}

#[test]
fn missing_dual_chevalley_exits_4() {
    // Keep the Sweedler comultiplication but replace the multiplication
    // with the pointwise diagonal one: the new unit (the all-ones vector)
    // leaves the coradical, so the coradical is no Hopf subalgebra.
    let tmp = tempfile::tempdir().expect("tempdir");
    let path = tmp.path().join("no-chevalley.json");
    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(golden("sweedler.json")).expect("golden"))
            .expect("parses");
    let dim = doc["dim"].as_u64().expect("dim") as usize;
    let one = serde_json::json!(["1"]);
    doc["mul"] = (0..dim).map(|i| serde_json::json!([i, i, i, one])).collect();
    doc["unit"] = (0..dim).map(|_| one.clone()).collect();
    doc["antipode"] = (0..dim).map(|i| serde_json::json!([i, i, one])).collect();
    std::fs::write(&path, serde_json::to_string(&doc).expect("serializes")).expect("write");

    let out = corep().arg("analyze").arg(&path).output().expect("runs");
    assert_eq!(out.status.code(), Some(4));
    let text = String::from_utf8_lossy(&out.stderr);
    assert!(
        text.contains("the unit does not lie in the coradical"),
        "got: {text}"
    );
}

#[test]
fn quiver_fusion_verdict_and_datum_subcommands_run() {
    let out = corep().arg("quiver").arg(golden("h16.json")).output().expect("runs");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let out = corep().arg("fusion").arg(golden("h16.json")).output().expect("runs");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("involution"), "got: {text}");

    let out = corep().arg("verdict").arg(golden("h32.json")).output().expect("runs");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("infinite corepresentation type"), "got: {text}");

    let out = corep().arg("datum").arg(golden("sweedler.json")).output().expect("runs");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("n=2"), "got: {text}");

    // DOT export from the quiver subcommand.
    let tmp = tempfile::tempdir().expect("tempdir");
    let dot_path = tmp.path().join("h16.dot");
    let out = corep()
        .arg("quiver")
        .arg(golden("h16.json"))
        .arg("--dot")
        .arg(&dot_path)
        .output()
        .expect("runs");
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(&dot_path).expect("dot written");
    assert!(dot.starts_with("digraph"), "got: {dot}");
}
