use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn sdm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn prove_translated_axiom() {
    let o = sdm(&["prove", "--system", "sm", "--depth", "25", "(seq htop (box (sim (circ bot))))"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("box_r"));
}

#[test]
fn prove_json_roundtrips_through_check_proof() {
    let o = sdm(&["--json", "prove", "--system", "ap", "(seq (and (not p) p) bot)"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["rule"].is_string() && v["conclusion"].is_string() && v["premises"].is_array());

    let dir = std::env::temp_dir().join(format!("sdm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("ap.json");
    std::fs::write(&file, &o.stdout).unwrap();
    let c = sdm(&["check-proof", "--system", "ap", file.to_str().unwrap()]);
    assert_eq!(code(&c), 0, "{}", stdout(&c));
    // the AP rule is not available in the base calculus
    let c = sdm(&["check-proof", "--system", "sm", file.to_str().unwrap()]);
    assert_eq!(code(&c), 1);
}

#[test]
fn unprovable_goal_is_refuted() {
    let o = sdm(&["prove", "--system", "sm", "(seq p (not (not p)))"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("countermodel"));
}

#[test]
fn check_algebra_flags() {
    let o = sdm(&["check-algebra", &data("three_chain_pc.json")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("flags: LQMA DPL APL WSA"));
}

#[test]
fn check_algebra_rejects() {
    let o = sdm(&["check-algebra", &data("bad.json")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("S2 fails at bottom"));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(code(&sdm(&["check-algebra", &data("malformed.json")])), 2);
    assert_eq!(code(&sdm(&["check-algebra", &data("missing.json")])), 2);
    assert_eq!(code(&sdm(&["parse", "(seq p"])), 2);
    assert_eq!(code(&sdm(&["prove", "--system", "xx", "(seq p p)"])), 2);
    assert_eq!(code(&sdm(&["frobnicate"])), 2);
}

#[test]
fn check_proof_rejects_bogus() {
    let o = sdm(&["check-proof", &data("bogus.proof")]);
    assert_eq!(code(&o), 1);
    let o = sdm(&["check-proof", "--system", "ap", &data("ap.proof")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("accepted"));
}

#[test]
fn reduce_atomic_cut() {
    let o = sdm(&["--json", "reduce-cut", &data("atom_cut.proof")]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rule"], "Id");
    let o = sdm(&["reduce-cut", &data("ap.proof")]);
    assert_eq!(code(&o), 1);
}

#[test]
fn classify_verdicts() {
    let o = sdm(&["classify", "(seq (and p q) p)"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("analytic-inductive"));
    assert!(out.contains("ε = (") && out.contains("Ω = {"));

    let o = sdm(&["--json", "classify", "(seq (box (sim (circ (box (circ p))))) p)"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "not-analytic-inductive");
}

#[test]
fn kernel_and_heterogenize() {
    let o = sdm(&["--json", "kernel", &data("three_chain_pc.json")]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kernel"]["size"], 2);

    let o = sdm(&["--json", "heterogenize", &data("three_chain_pc.json")]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["flags"]["h7"], true);
}

#[test]
fn validate_on_algebra() {
    let a = data("three_chain_pc.json");
    assert_eq!(code(&sdm(&["validate", &a, "(seq (and (not p) p) bot)"])), 0);
    assert_eq!(code(&sdm(&["validate", &a, "(seq (not (not p)) p)"])), 1);
}

#[test]
fn parse_and_translate() {
    let o = sdm(&["translate", "(not p)"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "(box (sim (circ p)))");
    let o = sdm(&["parse", "(seq (hand p q) (cbox (tcirc p)))"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn enumerate_small() {
    let o = sdm(&["enumerate", "--max-size", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("algebras"));
}

#[test]
fn suite_single_criterion() {
    let o = sdm(&["suite", "--profile", "quick", "--criterion", "7"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS"));
    assert_eq!(code(&sdm(&["suite", "--profile", "fast"])), 2);
}
