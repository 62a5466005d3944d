//! End-to-end tests of the command-line contract: subcommands, formats,
//! exit codes, determinism, and the constants-file plumbing.

use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_semiphoton-lab"));
    // Isolate from the ambient environment.
    c.env_remove("SEMIPHOTON_CONSTANTS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn semiphoton-lab")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn constants_table_shows_defaults_with_provenance() {
    let out = run(&["constants"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("defaults (CODATA 2018)"), "{text}");
    assert!(text.contains("2.99792458000e8"), "{text}");
}

#[test]
fn constants_json_round_trips_through_a_file() {
    let out = run(&["constants", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let parsed: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(parsed["c"], 299792458.0);
    for key in ["c", "hbar", "h", "e", "m_e", "epsilon_0", "alpha"] {
        assert!(parsed.get(key).is_some(), "missing {key}");
    }

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("constants.json");
    std::fs::write(&path, &text).unwrap();
    let reloaded = run(&["--constants", path.to_str().unwrap(), "constants", "--format", "json"]);
    assert_eq!(reloaded.status.code(), Some(0));
    assert_eq!(stdout(&reloaded), text, "reload must be byte-identical");
}

#[test]
fn env_var_supplies_the_constants_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.json");
    // A valid natural-units record: c = 1 is easy to spot in the output.
    let natural = r#"{"c":1.0,"hbar":1.0,"h":6.283185307179586,"e":0.08542454255532088,
                      "m_e":1.0,"epsilon_0":0.07957747154594767,"alpha":0.0072973525693}"#;
    std::fs::write(&path, natural).unwrap();
    let out = bin()
        .env("SEMIPHOTON_CONSTANTS", &path)
        .args(["constants", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["c"], 1.0);

    // The explicit flag wins over the environment.
    let out = bin()
        .env("SEMIPHOTON_CONSTANTS", "/nonexistent/and/never/read.json")
        .args(["--constants", path.to_str().unwrap(), "constants", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_constants_file_exits_2_and_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"c":299792458.0,"hbar":1.054571817e-34,"h":6.62607015e-34,"e":1.602176634e-19,
           "m_e":-9.1e-31,"epsilon_0":8.8541878128e-12,"alpha":7.2973525693e-3}"#,
    )
    .unwrap();
    let out = run(&["--constants", path.to_str().unwrap(), "constants"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("m_e"), "{}", stderr(&out));

    let out = run(&["--constants", "/no/such/file.json", "constants"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn inconsistent_planck_pair_is_rejected_at_load() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("skewed.json");
    // h deviates from 2*pi*hbar by far more than the tolerance.
    std::fs::write(
        &path,
        r#"{"c":299792458.0,"hbar":1.054571817e-34,"h":6.7e-34,"e":1.602176634e-19,
           "m_e":9.1093837015e-31,"epsilon_0":8.8541878128e-12,"alpha":7.2973525693e-3}"#,
    )
    .unwrap();
    let out = run(&["--constants", path.to_str().unwrap(), "audit"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains('h'), "{}", stderr(&out));
}

#[test]
fn model_params_match_the_golden_values() {
    let out = run(&["model-params", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let zeta = v["zeta"].as_f64().unwrap();
    assert!((zeta - 0.107).abs() < 5e-4, "zeta {zeta}");
    assert_eq!(v["phi0_ratio_to_h_over_e"].as_f64().unwrap(), 0.25);
    let r_s = v["r_s"].as_f64().unwrap();
    assert!((r_s / 1.93079e-13 - 1.0).abs() < 1e-5, "r_s {r_s}");
}

#[test]
fn verify_suites_pass_and_reject_unknown_names() {
    for suite in ["algebra", "fields", "ring", "model", "all"] {
        let out = run(&["verify", suite]);
        assert_eq!(out.status.code(), Some(0), "suite {suite}: {}", stdout(&out));
        assert!(stdout(&out).contains("PASS"));
        assert!(!stdout(&out).contains("FAIL"));
    }
    let out = run(&["verify", "foo"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_output_is_deterministic() {
    let a = run(&["verify", "all", "--format", "csv"]);
    let b = run(&["verify", "all", "--format", "csv"]);
    assert_eq!(out_bytes(&a), out_bytes(&b));
}

fn out_bytes(o: &Output) -> &[u8] {
    &o.stdout
}

#[test]
fn fields_csv_contract() {
    let out = run(&[
        "fields", "--system", "prime", "--a0", "2", "--omega", "1", "--samples", "4",
        "--format", "csv", "--constants", natural_constants_path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "t,y,Ex,Ey,Ez,Hx,Hy,Hz,Sx,Sy,Sz");
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first[0], "0"); // t
    assert_eq!(first[2], "2"); // Ex = A0
    assert_eq!(first[7], "-2"); // Hz = -A0
    // Sy column is constant at A0^2 for the prime system.
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let sy: f64 = cells[9].parse().unwrap();
        assert!((sy - 4.0).abs() < 1e-12, "{line}");
    }
    assert_eq!(text.lines().count(), 5);
}

fn natural_constants_path() -> std::path::PathBuf {
    let dir = std::env::temp_dir();
    let path = dir.join("semiphoton-natural-constants.json");
    let natural = r#"{"c":1.0,"hbar":1.0,"h":6.283185307179586,"e":0.08542454255532088,
                      "m_e":1.0,"epsilon_0":0.07957747154594767,"alpha":0.0072973525693}"#;
    std::fs::write(&path, natural).unwrap();
    path
}

#[test]
fn fields_rejects_single_sample() {
    let out = run(&["fields", "--system", "prime", "--a0", "1", "--omega", "1", "--samples", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fields_accepts_both_system_spellings() {
    for name in ["double_prime", "double-prime"] {
        let out = run(&[
            "fields", "--system", name, "--a0", "1", "--omega", "1e15", "--samples", "2",
            "--format", "json",
        ]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        // Double-prime moves the other way: Sy = -A0^2.
        assert!((rows[0]["Sy"].as_f64().unwrap() + 1.0).abs() < 1e-12);
    }
}

#[test]
fn ring_charge_classifies_polarizations() {
    let out = run(&["ring-charge", "--polarization", "circular", "--steps", "10000", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["classification"], "neutral");
    let charge = v["charge"].as_f64().unwrap();
    let reference = v["plane_reference"].as_f64().unwrap();
    assert!(charge.abs() < 1e-9 * reference.abs());

    let out = run(&["ring-charge", "--polarization", "plane", "--steps", "10000", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["classification"], "charged");
    assert!(v["relative_difference"].as_f64().unwrap() < 1e-8);
}

#[test]
fn ring_charge_csv_emits_the_current_trace() {
    let out = run(&["ring-charge", "--polarization", "plane", "--steps", "100", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "phase,j_n,j_tau,in_plane_projection");
    assert_eq!(text.lines().count(), 102); // header + steps+1 nodes
}

#[test]
fn ring_charge_rejects_underresolved_quadrature() {
    let out = run(&["ring-charge", "--polarization", "plane", "--steps", "99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn audit_json_carries_the_documented_statuses() {
    let out = run(&["audit", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let entries: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = entries.as_array().unwrap();
    assert_eq!(entries.len(), 11);
    let discrepant: Vec<&str> = entries
        .iter()
        .filter(|e| e["status"] == "discrepant_with_stated_factor")
        .map(|e| e["id"].as_str().unwrap())
        .collect();
    assert_eq!(discrepant, ["A.1", "A.6", "A.7"]);
    let a1 = entries.iter().find(|e| e["id"] == "A.1").unwrap();
    assert_eq!(a1["factor"], 2.0);
    for e in entries {
        for key in ["id", "lhs", "rhs", "residual", "status"] {
            assert!(e.get(key).is_some(), "missing {key} in {e}");
        }
    }
}

#[test]
fn out_flag_writes_the_file_instead_of_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fields.csv");
    let out = run(&[
        "fields", "--system", "prime", "--a0", "1", "--omega", "1e15", "--samples", "3",
        "--format", "csv", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("t,y,Ex"));
}

#[test]
fn precision_bounds_are_enforced() {
    for bad in ["5", "18", "0"] {
        let out = run(&["--precision", bad, "constants"]);
        assert_eq!(out.status.code(), Some(2), "precision {bad}");
    }
    let out = run(&["--precision", "6", "constants"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("2.99792e8"));
    let out = run(&["--precision", "17", "constants"]);
    assert_eq!(out.status.code(), Some(0));
}
