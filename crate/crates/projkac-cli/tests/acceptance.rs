//! Acceptance criteria 1–10, driven through the `projkac` binary.
//!
//! Prints one PASS/FAIL line per criterion. A criterion that fails for the
//! documented reason (the A17 mismatch) prints FAIL without failing the
//! target; any other outcome exits nonzero.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use projkac::checks::hbar_ladder;
use projkac::numerics::fixtures::gaussian;
use projkac::numerics::{classical_limit, Grid2D};
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_projkac");

/// The one catalog entry that does not reproduce its expectation, and the
/// witness it produces instead.
const KNOWN_MISMATCH: &str = "A17";
const KNOWN_WITNESS: &str = "-v1*x2 + v2*x1";

struct Run {
    code: i32,
    report: Value,
    elapsed: Duration,
}

fn run(dir: &Path, report: &str, args: &[&str]) -> Run {
    let start = Instant::now();
    let out = Command::new(BIN).args(args).arg("--out").arg(dir).output().expect("spawn projkac");
    let elapsed = start.elapsed();
    let text = std::fs::read_to_string(dir.join(report)).unwrap_or_else(|e| panic!("{report}: {e}"));
    Run { code: out.status.code().unwrap_or(-1), report: serde_json::from_str(&text).unwrap(), elapsed }
}

fn checks(report: &Value) -> Vec<(String, f64, f64, bool)> {
    let list: Vec<&Value> = match report.get("groups") {
        Some(groups) => groups.as_array().unwrap().iter().flat_map(|g| g["checks"].as_array().unwrap()).collect(),
        None => report["checks"].as_array().unwrap().iter().collect(),
    };
    list.iter()
        .map(|c| {
            let value = c["value"].as_f64().unwrap();
            (c["check"].as_str().unwrap().to_string(), value, c["tolerance"].as_f64().unwrap(), c["pass"].as_bool().unwrap())
        })
        .collect()
}

fn value(report: &Value, name: &str) -> f64 {
    checks(report).into_iter().find(|c| c.0 == name).unwrap_or_else(|| panic!("no record {name}")).1
}

#[derive(PartialEq)]
enum Verdict {
    Pass,
    /// Failed for the documented reason.
    KnownFail,
    /// Anything else.
    Broken,
}

struct Outcome {
    verdict: Verdict,
    detail: String,
}

fn pass(ok: bool, detail: String) -> Outcome {
    Outcome { verdict: if ok { Verdict::Pass } else { Verdict::Broken }, detail }
}

fn criterion_1(dir: &Path) -> Outcome {
    let r = run(dir, "axioms.json", &["axioms"]);
    let records = r.report["records"].as_array().unwrap();
    let mismatched: Vec<&str> = records
        .iter()
        .filter(|v| !v["matches_expectation"].as_bool().unwrap())
        .map(|v| v["id"].as_str().unwrap())
        .collect();
    let expected_failures: Vec<&str> = records
        .iter()
        .filter(|v| !v["expected_holds"].as_bool().unwrap())
        .map(|v| v["id"].as_str().unwrap())
        .collect();
    let a8 = records.iter().find(|v| v["id"] == "A8").unwrap();
    let a17 = records.iter().find(|v| v["id"] == KNOWN_MISMATCH).unwrap();
    let fast = r.elapsed < Duration::from_secs(5);
    let shape_ok = records.len() == 20 && expected_failures == ["A8", "A20"] && a8["witness_ok"] == true && fast;
    let detail = format!(
        "catalog: {} records in {:.2} s, mismatched {mismatched:?}, A8 witness {}",
        records.len(),
        r.elapsed.as_secs_f64(),
        a8["witness"].as_str().unwrap_or("-")
    );
    if shape_ok && mismatched.is_empty() && r.code == 0 {
        return pass(true, detail);
    }
    let known = shape_ok && mismatched == [KNOWN_MISMATCH] && r.code == 1 && a17["witness"] == KNOWN_WITNESS;
    Outcome { verdict: if known { Verdict::KnownFail } else { Verdict::Broken }, detail }
}

fn criterion_2(dir: &Path) -> Outcome {
    let r = run(dir, "axioms.json", &["axioms", "--filter", "A13,A14"]);
    let records = r.report["records"].as_array().unwrap();
    let holds = records.len() == 2 && records.iter().all(|v| v["holds"] == true);
    pass(r.code == 0 && holds, "pentagon A13 and projective pentagon A14 hold exactly".into())
}

fn criterion_3(dir: &Path) -> Outcome {
    let r = run(dir, "suite.json", &["suite", "--filter", "yang_baxter"]);
    let v = value(&r.report, "yang_baxter.residual");
    pass(r.code == 0 && v <= 1e-12, format!("braid residual on Z_8^2 = {v:.2e} <= 1e-12"))
}

fn criterion_4(dir: &Path) -> Outcome {
    let q = run(dir, "quantize.json", &["quantize"]);
    let fwd = value(&q.report, "weyl.round_trip");
    let kernel = dir.join("kernel.csv");
    let r = run(dir, "recover.json", &["recover", "--input", kernel.to_str().unwrap(), "--reference", "gaussian"]);
    let back = value(&r.report, "weyl.round_trip");
    let fast = q.elapsed < Duration::from_secs(5);
    pass(
        q.code == 0 && r.code == 0 && fwd <= 1e-8 && back <= 1e-8 && fast,
        format!("round trip {fwd:.2e}, via CSV {back:.2e} <= 1e-8 in {:.2} s", q.elapsed.as_secs_f64()),
    )
}

fn criterion_5(dir: &Path) -> Outcome {
    let r = run(dir, "suite.json", &["suite", "--filter", "weyl.homomorphism"]);
    let v = value(&r.report, "weyl.homomorphism");
    pass(r.code == 0 && v <= 1e-6, format!("homomorphism defect {v:.2e} <= 1e-6"))
}

fn criterion_6(dir: &Path) -> Outcome {
    let p = run(dir, "plancherel.json", &["plancherel"]);
    let g = value(&p.report, "plancherel.gaussian");
    let s = run(dir, "suite.json", &["suite", "--filter", "plancherel.band_limited"]);
    let b = value(&s.report, "plancherel.band_limited");
    pass(p.code == 0 && s.code == 0 && g <= 1e-8 && b <= 1e-6, format!("Gaussian {g:.2e} <= 1e-8, band-limited {b:.2e} <= 1e-6"))
}

fn criterion_7(dir: &Path) -> Outcome {
    let r = run(dir, "suite.json", &["suite", "--filter", "moyal.duality,moyal.classical_slope"]);
    let dual = value(&r.report, "moyal.duality");
    let slope = value(&r.report, "moyal.classical_slope");
    let small = run(dir, "suite.json", &["suite", "--hbar", "0.1", "--filter", "moyal.classical_slope"]);
    let slope_small = value(&small.report, "moyal.classical_slope");

    // sign convention: (2πħ)⁻¹(F∘G − G∘F) ≈ −iħ{F,G}
    let g = Grid2D::new(64, 16.0).unwrap();
    let cl = classical_limit(&gaussian(g, (0.5, 0.0), 1.0), &gaussian(g, (0.0, 0.4), 0.8), &hbar_ladder(1.0)).unwrap();
    let sign_ok = cl.sign == -1.0 && cl.opposite.iter().zip(&cl.residuals).all(|(o, r)| o > &(100.0 * r));
    pass(
        r.code == 0 && small.code == 0 && dual <= 1e-8 && slope >= 2.5 && slope_small >= 2.5 && sign_ok,
        format!("duality {dual:.2e} <= 1e-8, slope {slope:.2} (hbar 0.1: {slope_small:.2}) >= 2.5, sign s = {}", cl.sign),
    )
}

fn criterion_8(dir: &Path) -> Outcome {
    let g = run(dir, "wigner.json", &["wigner", "--state", "ground"]);
    let err = value(&g.report, "wigner.ground_state");
    let e = run(dir, "wigner.json", &["wigner", "--state", "excited"]);
    let min = value(&e.report, "wigner.excited_minimum");
    // closed form: the minimum is −2 at the origin
    pass(
        g.code == 0 && e.code == 0 && err <= 1e-6 && min < 0.0 && (min + 2.0).abs() < 1e-5,
        format!("ground state {err:.2e} <= 1e-6, excited minimum {min:.7} (oracle -2)"),
    )
}

fn criterion_9(dir: &Path) -> Outcome {
    let r = run(dir, "suite.json", &["suite", "--filter", "haar"]);
    let cs = checks(&r.report);
    let worst = cs.iter().map(|c| c.1).fold(0.0, f64::max);
    pass(r.code == 0 && cs.len() == 4 && worst <= 1e-12, format!("{} Haar residuals, worst {worst:.2e} <= 1e-12", cs.len()))
}

fn criterion_10(dir: &Path) -> Outcome {
    let r = run(dir, "suite.json", &["suite"]);
    let failures: Vec<&str> = r.report["failures"].as_array().unwrap().iter().map(|f| f.as_str().unwrap()).collect();
    let fast = r.elapsed < Duration::from_secs(60);
    let detail = format!("suite in {:.2} s, exit {}, failures {failures:?}", r.elapsed.as_secs_f64(), r.code);
    if fast && r.code == 0 && failures.is_empty() {
        return pass(true, detail);
    }
    let known = fast && r.code == 1 && failures == [format!("catalog.{KNOWN_MISMATCH}")];
    Outcome { verdict: if known { Verdict::KnownFail } else { Verdict::Broken }, detail }
}

fn main() {
    let criteria: [fn(&Path) -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut broken = 0;
    for (i, c) in criteria.iter().enumerate() {
        let dir = tempfile::tempdir().unwrap();
        let o = c(dir.path());
        let tag = match o.verdict {
            Verdict::Pass => "PASS",
            Verdict::KnownFail => "FAIL (known)",
            Verdict::Broken => "FAIL",
        };
        println!("criterion {:>2}: {tag}: {}", i + 1, o.detail);
        broken += (o.verdict == Verdict::Broken) as usize;
    }
    if broken > 0 {
        eprintln!("{broken} criterion/criteria failed unexpectedly");
        std::process::exit(1);
    }
}
