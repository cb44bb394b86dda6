use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_projkac");

fn projkac(out: &Path, args: &[&str]) -> Output {
    Command::new(BIN).args(args).arg("--out").arg(out).output().unwrap()
}

fn report(out: &Path, name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(out.join(name)).unwrap()).unwrap()
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let args = ["suite", "--filter", "plancherel,haar", "--seed", "7"];
    assert!(projkac(a.path(), &args).status.success());
    assert!(projkac(b.path(), &args).status.success());
    let read = |d: &Path| std::fs::read(d.join("suite.json")).unwrap();
    assert_eq!(read(a.path()), read(b.path()));
}

#[test]
fn output_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(BIN).args(["plancherel"]).env("PROJKAC_OUT", dir.path()).output().unwrap();
    assert!(out.status.success());
    assert_eq!(report(dir.path(), "plancherel.json")["checks"][0]["check"], "plancherel.gaussian");
}

#[test]
fn catalog_filter_selects_one_record() {
    let dir = tempfile::tempdir().unwrap();
    assert!(projkac(dir.path(), &["axioms", "--filter", "A13"]).status.success());
    let r = report(dir.path(), "axioms.json");
    assert_eq!(r["records"].as_array().unwrap().len(), 1);
    assert_eq!(r["records"][0]["holds"], true);
}

#[test]
fn flipped_theta_is_caught_at_a4() {
    let dir = tempfile::tempdir().unwrap();
    let out = projkac(dir.path(), &["axioms", "--flip-theta"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(dir.path(), "axioms.json")["first_mismatch"], "A4");
    assert!(String::from_utf8_lossy(&out.stderr).contains("A4"));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "n,extent\n4,2\nindex,re,im\n0,1\n").unwrap();
    let cases: [&[&str]; 5] = [
        &["plancherel", "--input", bad.to_str().unwrap()],
        &["suite", "--grid-n", "48"],
        &["suite", "--hbar", "-1"],
        &["suite", "--tol", "no.such.check=1"],
        &["axioms", "--filter", "A99"],
    ];
    for args in cases {
        assert_eq!(projkac(dir.path(), args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(projkac(dir.path(), &["bogus"]).status.code(), Some(2));
}

#[test]
fn grid_mismatch_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    projkac(dir.path(), &["quantize", "--grid-n", "16", "--extent", "8"]);
    let kernel = dir.path().join("kernel.csv");
    let out = projkac(dir.path(), &["recover", "--input", kernel.to_str().unwrap(), "--grid-n", "32"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("grid mismatch"));
}

#[test]
fn tolerance_breach_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = projkac(dir.path(), &["plancherel", "--tol.plancherel.gaussian", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(dir.path(), "plancherel.json");
    assert_eq!(r["pass"], false);
    assert_eq!(r["config"]["tolerances"]["plancherel.gaussian"], 0.0);
}

#[test]
fn json_data_files_round_trip_through_recover() {
    let dir = tempfile::tempdir().unwrap();
    assert!(projkac(dir.path(), &["quantize", "--format", "json"]).status.success());
    let kernel = dir.path().join("kernel.json");
    let out = projkac(dir.path(), &["recover", "--input", kernel.to_str().unwrap(), "--reference", "gaussian", "--format", "json"]);
    assert!(out.status.success());
    assert!(dir.path().join("recovered.json").exists());
    assert!(report(dir.path(), "recover.json")["checks"][0]["value"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn wigner_writes_grid_and_passes_reality() {
    let dir = tempfile::tempdir().unwrap();
    assert!(projkac(dir.path(), &["wigner"]).status.success());
    let csv = std::fs::read_to_string(dir.path().join("wigner.csv")).unwrap();
    assert!(csv.starts_with("n,extent\n64,"));
    let r = report(dir.path(), "wigner.json");
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn star_of_saved_inputs() {
    let dir = tempfile::tempdir().unwrap();
    assert!(projkac(dir.path(), &["quantize", "--grid-n", "32", "--extent", "12"]).status.success());
    let kernel = dir.path().join("kernel.csv");
    assert!(projkac(dir.path(), &["recover", "--input", kernel.to_str().unwrap()]).status.success());
    let f = dir.path().join("recovered.csv");
    let f = f.to_str().unwrap();
    assert!(projkac(dir.path(), &["star", "--left", f, "--right", f]).status.success());
    assert!(dir.path().join("star.csv").exists());
}

#[test]
fn coarse_grid_suite_passes_numerics() {
    let dir = tempfile::tempdir().unwrap();
    let out = projkac(dir.path(), &["suite", "--grid-n", "32", "--filter", "yang_baxter,weyl,plancherel,moyal,wigner,haar"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}
