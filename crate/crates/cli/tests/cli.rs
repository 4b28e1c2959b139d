use std::process::{Command, Output};

use serde_json::{json, Value};

fn cliffkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffkit"))
        .args(args)
        .env_remove("CLIFFKIT_TOL")
        .output()
        .expect("binary runs")
}

fn json_of(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = cliffkit(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text:?}"));
    assert_eq!(v["schema"], "1");
    (v, out.status.code().unwrap())
}

#[test]
fn classify_record() {
    let (v, code) = json_of(&["classify", "3,1"]);
    assert_eq!(code, 0);
    assert_eq!(
        v,
        json!({"schema":"1","ring":"R","size":4,"summands":1,"omega_sq":-1,"dim":16})
    );
    let out = cliffkit(&["classify", "3,1", "--json"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"{"dim":16,"omega_sq":-1,"ring":"R","schema":"1","size":4,"summands":1}"#
    );
    assert_eq!(json_of(&["classify", "4,1"]).0["ring"], "C");
    assert_eq!(json_of(&["classify", "0,3"]).0["summands"], 2);
}

#[test]
fn ko_lorentzian_four() {
    let (v, code) = json_of(&["ko", "4", "--lorentzian"]);
    assert_eq!(code, 0);
    assert_eq!(v, json!({"schema":"1","J2":1,"eps":-1,"ko_dim":6}));
    let (v, _) = json_of(&["ko", "4"]);
    assert_eq!((v["J2"].as_i64(), v["eps"].as_i64(), v["ko_dim"].as_i64()), (Some(-1), Some(1), Some(4)));
}

#[test]
fn seesaw_decoupled() {
    let (v, code) = json_of(&["seesaw", "--yh", "0", "--m", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["m_light"], json!(0));
    assert_eq!(v["M_heavy"], json!(5));
    let (v, _) = json_of(&["seesaw", "--yh", "1", "--m", "1000"]);
    assert_eq!(v["hierarchy"], json!(true));
    let light = v["m_light"].as_f64().unwrap();
    assert!((light - 1e-3).abs() / 1e-3 < 1.1e-6);
}

#[test]
fn majorana_audit_payload() {
    let (v, code) = json_of(&["majorana-audit"]);
    assert_eq!(code, 0);
    assert_eq!(v["mass_commuting"], "0");
    assert_eq!(v["current_anticommuting"], "0");
    assert_eq!(v["mass_anticommuting"], "(-2i)*theta1^theta2 + (-2i)*theta3^theta4");
}

#[test]
fn pin_check_verdicts() {
    let (v, code) = json_of(&["pin-check", "3,0", "e1"]);
    assert_eq!(code, 0);
    assert_eq!(v["membership"], "Pin");
    assert_eq!(v["L"], json!([["-1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]));
    let (v, code) = json_of(&["pin-check", "3,0", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["membership"], "Lipschitz-only");
    let (v, code) = json_of(&["pin-check", "2,0", "1 + e1"]);
    assert_eq!(code, 1);
    assert_eq!(v["membership"], "none");
    let (v, code) = json_of(&["pin-check", "3,1", "0.6*e1^e2 + 0.8"]);
    assert_eq!((v["membership"].as_str(), code), (Some("Spin"), 0));
}

#[test]
fn rational_payload_round_trips() {
    let (v, _) = json_of(&["pin-check", "3,1", "3/4 + 1/2*e1^e4"]);
    assert_eq!(v["norm"], "5/16");
    assert_eq!(v["L"][0][0], "13/5");
    assert_eq!(v["element"], "3/4 + 1/2*e1^e4");
}

#[test]
fn rotors() {
    let (v, code) = json_of(&["rotor", "--axis", "0,0,1", "--angle", "3.141592653589793"]);
    assert_eq!(code, 0);
    let l = &v["L"];
    assert_eq!(l[0][0], json!(-1));
    assert_eq!(l[2][2], json!(1));
    let (v, code) = json_of(&["rotor", "3,1", "--bivector", "0.3*e1^e4"]);
    assert_eq!((v["membership"].as_str(), code), (Some("Spin"), 0));
    assert_eq!(cliffkit(&["rotor", "3,0", "--bivector", "e1"]).status.code(), Some(2));
}

#[test]
fn gamma_payloads() {
    let (v, code) = json_of(&["gamma", "2"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["gammas"],
        json!([[[[0, 0], [1, 0]], [[1, 0], [0, 0]]], [[[0, 0], [0, -1]], [[0, 1], [0, 0]]]])
    );
    let (v, _) = json_of(&["gamma", "4", "--lorentzian", "--basis", "majorana"]);
    for g in v["gammas"].as_array().unwrap() {
        for row in g.as_array().unwrap() {
            for z in row.as_array().unwrap() {
                assert_eq!(z[1], json!(0));
            }
        }
    }
    let (v, code) = json_of(&["gamma", "10", "--lorentzian"]);
    assert_eq!(code, 0);
    assert_eq!(v["gammas"].as_array().unwrap().len(), 10);
    assert_eq!(cliffkit(&["gamma", "6", "--basis", "dirac"]).status.code(), Some(2));
}

#[test]
fn conjugation_matrices() {
    let (v, code) = json_of(&["conjugation", "4"]);
    assert_eq!(code, 0);
    assert_eq!((v["CbarC"].as_i64(), v["gamma_transpose_sign"].as_i64()), (Some(-1), Some(-1)));
    let (v, _) = json_of(&["conjugation", "5"]);
    assert_eq!(v["irreducible_exists"], json!(false));
    let (v, _) = json_of(&["conjugation", "7"]);
    assert_eq!(v["irreducible_exists"], json!(true));
    assert_eq!(cliffkit(&["conjugation", "4", "--primed"]).status.code(), Some(2));
}

#[test]
fn majorana_classes() {
    let (v, _) = json_of(&["majorana-class", "9,1"]);
    assert_eq!(v["kind"], "majorana_weyl");
    let (v, _) = json_of(&["majorana-class", "3,1"]);
    assert_eq!(v["kind"], "majorana");
    let (v, _) = json_of(&["majorana-class", "1,3"]);
    assert_eq!(v["kind"], "none");
}

#[test]
fn dirac_spinors() {
    for basis in ["chiral", "dirac", "majorana"] {
        let (v, code) = json_of(&["dirac", "--mass", "1", "--p", "0.3,-0.2,1", "--basis", basis]);
        assert_eq!(code, 0, "{basis}");
        assert_eq!(v["u"].as_array().unwrap().len(), 2);
        for r in v["residuals"].as_object().unwrap().values() {
            assert!(r.as_f64().unwrap() < 1e-12);
        }
    }
    assert_eq!(cliffkit(&["dirac", "--mass", "0", "--p", "1,0,0"]).status.code(), Some(2));
}

#[test]
fn even_and_periodicity() {
    let (v, code) = json_of(&["even", "3,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["target"], json!([3, 0]));
    let (v, code) = json_of(&["periodicity", "0,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn weyl_transport() {
    let (v, code) = json_of(&["weyl1d", "--t", "0.7", "--grid", "-3,3,7"]);
    assert_eq!(code, 0);
    assert_eq!(v["l2_left"], json!(0));
    assert_eq!(v["x"].as_array().unwrap().len(), 7);
    // ψ_L(t, x) = exp(-(x + t)²); at x = 0 that is exp(-0.49).
    let at0 = v["left"][3].as_f64().unwrap();
    assert!((at0 - (-0.49f64).exp()).abs() < 1e-14);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["classify", "3"][..],
        &["frobnicate"],
        &["pin-check", "3,0", "e9"],
        &["pin-check", "3,0", "2*x1"],
        &["ko", "3"],
    ] {
        let out = cliffkit(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn tolerance_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_cliffkit"))
        .args(["gamma", "4", "--lorentzian", "--basis", "majorana"])
        .env("CLIFFKIT_TOL", "0")
        .output()
        .unwrap();
    // The basis change leaves rounding residue above a zero tolerance.
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_cliffkit"))
        .args(["classify", "1,1"])
        .env("CLIFFKIT_TOL", "abc")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_lists_equations() {
    for sub in [
        "classify", "even", "periodicity", "pin-check", "rotor", "gamma", "conjugation", "ko",
        "majorana-class", "dirac", "majorana-audit", "seesaw", "weyl1d",
    ] {
        let out = cliffkit(&[sub, "--help"]);
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("Equation"), "{sub}");
    }
}

#[test]
fn tables_by_default() {
    let out = cliffkit(&["classify", "3,1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("ring") && text.contains(" R"));
    assert!(!text.trim_start().starts_with('{'));
}
