//! Subcommand implementations.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;

use projkac::algebra::{verify_all, verify_identity_with, CatalogOptions, Verification};
use projkac::checks::{self, direct_star_residual, imaginary_ratio, real_minimum, CheckConfig, GROUPS};
use projkac::io::Persist;
use projkac::numerics::fixtures::{first_excited_state, gaussian, ground_state, ground_state_wigner};
use projkac::numerics::{
    moyal_star, plancherel_residual, weyl_quantize, wigner_distribution, wigner_recover, Grid2D, GridFunction2D,
    OperatorKernel, WaveFunction1D,
};
use projkac::report::{CheckRecord, Report};
use projkac::symbolic::int;
use projkac::Error;

use crate::args::{Cli, Command, Common};

pub enum Failure {
    /// A check ran and missed its tolerance.
    Check(String),
    /// Unreadable input, bad flags or a grid mismatch.
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Check(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

pub fn run(cli: &Cli) -> Outcome {
    let cfg = config(&cli.common)?;
    fs::create_dir_all(&cli.common.out).map_err(|e| Failure::Input(format!("{}: {e}", cli.common.out.display())))?;
    let ctx = Ctx { common: &cli.common, cfg };
    match &cli.command {
        Command::Axioms => ctx.axioms(),
        Command::Quantize { input } => ctx.quantize(input),
        Command::Recover { input, reference } => ctx.recover(input, reference.as_deref()),
        Command::Wigner { state } => ctx.wigner(state),
        Command::Star { left, right } => ctx.star(left, right),
        Command::Plancherel { input } => ctx.plancherel(input),
        Command::Suite => ctx.suite(),
    }
}

fn config(c: &Common) -> Result<CheckConfig, Failure> {
    let defaults = CheckConfig::default();
    let mut cfg = CheckConfig {
        grid_n: c.grid_n.unwrap_or(defaults.grid_n),
        extent: c.extent.unwrap_or(defaults.extent),
        hbar: c.hbar,
        nu: c.nu.unwrap_or(defaults.nu),
        seed: c.seed,
        tolerances: Default::default(),
    };
    for t in &c.tol {
        let (name, value) = t.split_once('=').ok_or_else(|| Failure::Input(format!("--tol expects CHECK=VALUE, got '{t}'")))?;
        let value: f64 = value.parse().map_err(|_| Failure::Input(format!("bad tolerance value in '{t}'")))?;
        cfg.tolerances.insert(name.to_string(), value);
    }
    cfg.validate()?;
    Ok(cfg)
}

#[derive(Serialize)]
struct RunReport<'a> {
    command: &'a str,
    config: &'a CheckConfig,
    inputs: Vec<String>,
    outputs: Vec<String>,
    checks: Vec<CheckRecord>,
    pass: bool,
}

#[derive(Serialize)]
struct AxiomRecord {
    #[serde(flatten)]
    verification: Verification,
    matches_expectation: bool,
}

#[derive(Serialize)]
struct AxiomReport {
    command: &'static str,
    flip_theta: bool,
    records: Vec<AxiomRecord>,
    first_mismatch: Option<String>,
    pass: bool,
}

#[derive(Serialize)]
struct GroupReport {
    group: String,
    checks: Vec<CheckRecord>,
}

#[derive(Serialize)]
struct SuiteReport<'a> {
    command: &'static str,
    config: &'a CheckConfig,
    flip_theta: bool,
    groups: Vec<GroupReport>,
    failures: Vec<String>,
    pass: bool,
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Outcome {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure::Input(e.to_string()))?;
    text.push('\n');
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn print_records(records: &[CheckRecord]) {
    for r in records {
        let tag = if r.pass { "PASS" } else { "FAIL" };
        println!("{tag} {:<28} {:>13.6e}  (tolerance {:e})", r.check, r.value, r.tolerance);
    }
}

fn verdict(records: &[CheckRecord]) -> Outcome {
    match records.iter().find(|r| !r.pass) {
        None => Ok(()),
        Some(r) => Err(Failure::Check(format!("{} = {:e} against tolerance {:e}", r.check, r.value, r.tolerance))),
    }
}

struct Ctx<'a> {
    common: &'a Common,
    cfg: CheckConfig,
}

impl Ctx<'_> {
    fn grid(&self) -> Result<Grid2D, Failure> {
        Ok(self.cfg.grid()?)
    }

    fn catalog_options(&self) -> CatalogOptions {
        if self.common.flip_theta {
            CatalogOptions { theta_sign: int(-1) }
        } else {
            CatalogOptions::default()
        }
    }

    fn data_path(&self, stem: &str) -> PathBuf {
        self.common.out.join(format!("{stem}.{}", self.common.format.ext()))
    }

    /// Rejects files whose grid contradicts an explicit `--grid-n` or
    /// `--extent`.
    fn check_file_grid(&self, name: &str, grid: Grid2D) -> Outcome {
        let n_ok = self.common.grid_n.is_none_or(|n| n == grid.n);
        let l_ok = self.common.extent.is_none_or(|l| l == grid.extent);
        if n_ok && l_ok {
            Ok(())
        } else {
            Err(Error::GridMismatch(format!("{name} is sampled on n = {}, extent = {}", grid.n, grid.extent)).into())
        }
    }

    fn function(&self, name: &str) -> Result<(GridFunction2D, bool), Failure> {
        let g = self.grid()?;
        match name {
            "gaussian" => Ok((gaussian(g, (0.0, 0.0), 1.0), true)),
            "gaussian-shifted" => Ok((gaussian(g, (-0.4, 0.6), 0.9), true)),
            path => {
                let f = GridFunction2D::load(Path::new(path))?;
                self.check_file_grid(path, f.grid)?;
                Ok((f, false))
            }
        }
    }

    fn state(&self, name: &str) -> Result<WaveFunction1D, Failure> {
        let g = self.grid()?;
        match name {
            "ground" => Ok(ground_state(g, self.cfg.hbar)),
            "excited" => Ok(first_excited_state(g, self.cfg.hbar)),
            path => {
                let s = WaveFunction1D::load(Path::new(path))?;
                self.check_file_grid(path, s.grid())?;
                Ok(s)
            }
        }
    }

    fn finish(&self, command: &str, inputs: Vec<String>, outputs: Vec<PathBuf>, checks: Vec<CheckRecord>) -> Outcome {
        print_records(&checks);
        let outputs = outputs.iter().map(|p| p.file_name().unwrap_or_default().to_string_lossy().into_owned()).collect();
        let pass = checks.iter().all(|c| c.pass);
        let report = RunReport { command, config: &self.cfg, inputs, outputs, checks, pass };
        write_json(&self.common.out.join(format!("{command}.json")), &report)?;
        verdict(&report.checks)
    }

    fn axioms(&self) -> Outcome {
        let opts = self.catalog_options();
        let verifications = match &self.common.filter {
            None => verify_all(&opts)?,
            Some(list) => list
                .split(',')
                .map(|id| verify_identity_with(id.trim(), &opts))
                .collect::<Result<Vec<_>, _>>()?,
        };
        let records: Vec<AxiomRecord> = verifications
            .into_iter()
            .map(|v| AxiomRecord { matches_expectation: v.matches_expectation(), verification: v })
            .collect();
        for r in &records {
            let v = &r.verification;
            let tag = if r.matches_expectation { "PASS" } else { "FAIL" };
            println!("{tag} {:<4} holds={:<5} expected={}", v.id, v.holds, v.expected_holds);
        }
        let mismatch = records.iter().find(|r| !r.matches_expectation);
        let message = mismatch.map(|r| {
            let v = &r.verification;
            match &v.witness {
                Some(w) => format!("{} does not match its expectation; witness {w}", v.id),
                None => format!("{} does not match its expectation", v.id),
            }
        });
        let report = AxiomReport {
            command: "axioms",
            flip_theta: self.common.flip_theta,
            first_mismatch: mismatch.map(|r| r.verification.id.clone()),
            pass: mismatch.is_none(),
            records,
        };
        write_json(&self.common.out.join("axioms.json"), &report)?;
        message.map_or(Ok(()), |m| Err(Failure::Check(m)))
    }

    fn quantize(&self, input: &str) -> Outcome {
        let (f, _) = self.function(input)?;
        let k = weyl_quantize(&f, self.cfg.nu);
        let out = self.data_path("kernel");
        k.save(&out)?;
        let back = wigner_recover(&k, self.cfg.nu);
        let checks = vec![self.cfg.at_most("weyl.round_trip", back.rel_l2_error(&f)?)];
        self.finish("quantize", vec![input.to_string()], vec![out], checks)
    }

    fn recover(&self, input: &Path, reference: Option<&str>) -> Outcome {
        let k = OperatorKernel::load(input)?;
        self.check_file_grid(&input.display().to_string(), k.grid())?;
        if let Some(nu) = self.common.nu {
            if nu != k.nu {
                return Err(Error::GridMismatch(format!("--nu {nu} but the kernel carries nu = {}", k.nu)).into());
            }
        }
        let f = wigner_recover(&k, k.nu);
        let out = self.data_path("recovered");
        f.save(&out)?;
        let mut inputs = vec![input.display().to_string()];
        let mut checks = Vec::new();
        if let Some(r) = reference {
            let (want, _) = self.function(r)?;
            checks.push(self.cfg.at_most("weyl.round_trip", f.rel_l2_error(&want)?));
            inputs.push(r.to_string());
        }
        self.finish("recover", inputs, vec![out], checks)
    }

    fn wigner(&self, state: &str) -> Outcome {
        let h = self.cfg.hbar;
        let xi = self.state(state)?;
        let w = wigner_distribution(&xi, &xi, h)?;
        let out = self.data_path("wigner");
        w.save(&out)?;
        let mut checks = vec![self.cfg.at_most("wigner.reality", imaginary_ratio(&w))];
        match state {
            "ground" => checks.push(self.cfg.at_most("wigner.ground_state", w.rel_l2_error(&ground_state_wigner(w.grid, h))?)),
            "excited" => {
                let name = "wigner.excited_minimum";
                checks.push(CheckRecord::below(name, real_minimum(&w), self.cfg.tolerance(name)));
            }
            _ => {}
        }
        self.finish("wigner", vec![state.to_string()], vec![out], checks)
    }

    fn star(&self, left: &str, right: &str) -> Outcome {
        let ((f, _), (g, _)) = (self.function(left)?, self.function(right)?);
        let p = moyal_star(&f, &g, self.cfg.hbar)?;
        let out = self.data_path("star");
        p.save(&out)?;
        let checks = vec![self.cfg.at_most("moyal.duality_direct", direct_star_residual(&f, &g, &p, self.cfg.hbar)?)];
        self.finish("star", vec![left.to_string(), right.to_string()], vec![out], checks)
    }

    fn plancherel(&self, input: &str) -> Outcome {
        let (f, bundled) = self.function(input)?;
        let name = if bundled { "plancherel.gaussian" } else { "plancherel.input" };
        let checks = vec![self.cfg.at_most(name, plancherel_residual(&f, self.cfg.nu).value)];
        self.finish("plancherel", vec![input.to_string()], Vec::new(), checks)
    }

    fn suite(&self) -> Outcome {
        let start = Instant::now();
        let filters: Option<Vec<&str>> = self.common.filter.as_deref().map(|f| f.split(',').map(str::trim).collect());
        let wanted_group = |g: &str| {
            filters.as_ref().is_none_or(|fs| fs.iter().any(|f| *f == g || f.starts_with(&format!("{g}."))))
        };
        let wanted_check = |c: &str| filters.as_ref().is_none_or(|fs| fs.iter().any(|f| c == *f || c.starts_with(&format!("{f}."))));
        let opts = self.catalog_options();
        let mut groups = Vec::new();
        for g in GROUPS.iter().filter(|g| wanted_group(g)) {
            let Report { checks } = checks::run_group(g, &self.cfg, &opts)?;
            let checks: Vec<CheckRecord> = checks.into_iter().filter(|c| wanted_check(&c.check)).collect();
            print_records(&checks);
            groups.push(GroupReport { group: g.to_string(), checks });
        }
        if groups.iter().all(|g| g.checks.is_empty()) {
            return Err(Failure::Input(format!("filter {:?} selects no checks", self.common.filter.as_deref().unwrap_or(""))));
        }
        let failures: Vec<String> =
            groups.iter().flat_map(|g| g.checks.iter().filter(|c| !c.pass).map(|c| c.check.clone())).collect();
        let report = SuiteReport {
            command: "suite",
            config: &self.cfg,
            flip_theta: self.common.flip_theta,
            pass: failures.is_empty(),
            failures,
            groups,
        };
        write_json(&self.common.out.join("suite.json"), &report)?;
        eprintln!("suite finished in {:.2} s", start.elapsed().as_secs_f64());
        if report.pass {
            Ok(())
        } else {
            Err(Failure::Check(format!("{} check(s) failed: {}", report.failures.len(), report.failures.join(", "))))
        }
    }
}
