use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(rel: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    root.join(rel).to_string_lossy().into_owned()
}

fn cardy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cardy")).args(args).output().expect("binary runs")
}

fn json_out(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn torus_over_z2() {
    let out = cardy(&["hurwitz", "--group", &data("groups/z2_trivial.json"), "--surface", &data("surfaces/torus.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_out(&out), json!({"hurwitz": "2"}));
}

#[test]
fn z2_surface_values() {
    for (surface, expected) in [
        ("sphere", "1/2"),
        ("projective_plane", "1"),
        ("klein_bottle", "2"),
        ("disc_b1_b2", "1/2"),
        ("sphere_two_points", "1/2"),
        ("cylinder_b0_b0", "1"),
        ("torus_and_projective_plane", "2"),
    ] {
        let path = data(&format!("surfaces/{surface}.json"));
        let out = cardy(&["hurwitz", "--group", &data("groups/z2_trivial.json"), "--surface", &path]);
        assert_eq!(json_out(&out)["hurwitz"], json!(expected), "{surface}");
    }
}

#[test]
fn hurwitz_and_oracle_agree_on_bundled_inputs() {
    let groups = ["z2_trivial", "z3_trivial", "s3_trivial", "s3_transposition", "s4_double_transposition", "a5_z2"];
    let surfaces = std::fs::read_dir(data("surfaces")).unwrap().map(|e| e.unwrap().path()).collect::<Vec<_>>();
    let mut compared = 0;
    for g in groups {
        let group = data(&format!("groups/{g}.json"));
        for s in &surfaces {
            let s = s.to_string_lossy();
            let formula = cardy(&["hurwitz", "--group", &group, "--surface", &s]);
            let oracle = cardy(&["oracle", "--group", &group, "--surface", &s]);
            assert_eq!(formula.status.code(), oracle.status.code(), "{g} {s}");
            if formula.status.success() {
                assert_eq!(json_out(&formula)["hurwitz"], json_out(&oracle)["hurwitz_oracle"], "{g} {s}");
                compared += 1;
            } else {
                assert_eq!(formula.status.code(), Some(2), "unknown labels are input errors");
            }
        }
    }
    assert!(compared >= 30, "{compared}");
}

#[test]
fn check_a5_passes() {
    let out = cardy(&["check", "--group", &data("groups/a5_z2.json")]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_out(&out);
    let checks = report.as_array().unwrap();
    assert!(checks.len() > 20);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    let fields = json_out(&cardy(&["fields", "--group", &data("groups/a5_z2.json")]));
    assert_eq!(fields["points"].as_array().unwrap().len(), 8);
    assert_eq!(fields["boundary"].as_array().unwrap().len(), 40);
    assert_eq!(fields["interior"].as_array().unwrap().len(), 2);
}

#[test]
fn info_flags_non_core_free_k() {
    let out = cardy(&["info", "--group", &data("groups/z2_z2.json")]);
    assert_eq!(out.status.code(), Some(0));
    let info = json_out(&out);
    assert_eq!(info["N_order"], 1);
    assert_eq!(info["X_size"], 1);
    assert_eq!(info["core_free"], false);
    assert_eq!(info["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn algebra_dump_is_exact_and_deterministic() {
    let args = ["algebra", "--dump", "--group", &data("groups/s3_transposition.json")];
    let (a, b) = (cardy(&args), cardy(&args));
    assert_eq!(a.stdout, b.stdout);
    let dump = json_out(&a);
    for key in ["A", "B", "phi", "U", "K_A", "K_B"] {
        assert!(dump.get(key).is_some(), "{key}");
    }
    let z2 = json_out(&cardy(&["algebra", "--dump", "--group", &data("groups/z2_trivial.json")]));
    assert_eq!(z2["B"]["structure_constants"]["b1"]["b2"], json!({"b0": "1"}));
    assert_eq!(z2["A"]["form"][0][0], json!("1/2"));
    assert_eq!(z2["B"]["involution"], json!(["b0", "b2", "b1", "b3"]));
}

#[test]
fn hecke_command() {
    let out = cardy(&["hecke", "--group", &data("groups/s3_trivial.json"), "--subgroup-generators", "[[1,0,2]]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_out(&out)["double_cosets"], 2);
    let out = cardy(&[
        "hecke",
        "--group",
        &data("groups/s4_trivial.json"),
        "--subgroup-generators",
        &data("subgroups/s4_transposition.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_out(&out)["dim_B"], 7);
}

#[test]
fn parse_errors_exit_2_with_path() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"degree": 3, "generators": [[1, 0, "x"]]}"#).unwrap();
    let out = cardy(&["info", "--group", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("generators[0][2]"));

    let surface = dir.path().join("surface.json");
    std::fs::write(&surface, r#"{"orientable": true, "genus": 0, "boundary": [["b0", 7]]}"#).unwrap();
    let out = cardy(&["hurwitz", "--group", &data("groups/z2_trivial.json"), "--surface", surface.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("boundary[0][1]"));
}

#[test]
fn input_errors_exit_2() {
    let out = cardy(&["hurwitz", "--group", &data("groups/z2_trivial.json")]);
    assert_eq!(out.status.code(), Some(2));
    let out = cardy(&["info", "--group", "/nonexistent/group.json"]);
    assert_eq!(out.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let surface = dir.path().join("surface.json");
    std::fs::write(&surface, r#"{"orientable": true, "genus": "1/2"}"#).unwrap();
    let out = cardy(&["hurwitz", "--group", &data("groups/z2_trivial.json"), "--surface", surface.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resource_bounds_exit_3() {
    let out = cardy(&["info", "--group", &data("groups/a5_z2.json"), "--order-bound", "59"]);
    assert_eq!(out.status.code(), Some(3));
    let out = cardy(&["oracle", "--group", &data("groups/s4_trivial.json"), "--surface", &data("surfaces/torus.json"), "--tuple-bound", "575"]);
    assert_eq!(out.status.code(), Some(3));
    let out = cardy(&["oracle", "--group", &data("groups/s4_trivial.json"), "--surface", &data("surfaces/torus.json"), "--tuple-bound", "576"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_out(&out), json!({"hurwitz_oracle": "5", "tuples": 576}));
}
