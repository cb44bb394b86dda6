//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "projkac", version, about = "Phase-cocycle identities and Weyl-Wigner checks on the plane")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Grid points per axis (power of two) for bundled fixtures.
    #[arg(long, global = true)]
    pub grid_n: Option<usize>,
    /// Side length of the square grid.
    #[arg(long, global = true)]
    pub extent: Option<f64>,
    #[arg(long, global = true, default_value_t = 1.0)]
    pub hbar: f64,
    /// Representation parameter; kernels read from disk carry their own.
    #[arg(long, global = true)]
    pub nu: Option<f64>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Tolerance override `CHECK=VALUE`; also accepted as `--tol.CHECK VALUE`.
    #[arg(long = "tol", global = true, value_name = "CHECK=VALUE")]
    pub tol: Vec<String>,
    /// Output directory.
    #[arg(long, global = true, env = "PROJKAC_OUT", default_value = ".")]
    pub out: PathBuf,
    /// Comma-separated identity ids (axioms) or group/check prefixes (suite).
    #[arg(long, global = true)]
    pub filter: Option<String>,
    /// Encoding of written data files.
    #[arg(long, global = true, value_enum, default_value_t = DataFormat::Csv)]
    pub format: DataFormat,
    /// Flip the sign of the Θ cocycle in the catalog (mutation testing).
    #[arg(long, global = true, hide = true)]
    pub flip_theta: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DataFormat {
    Csv,
    Json,
}

impl DataFormat {
    pub fn ext(self) -> &'static str {
        match self {
            DataFormat::Csv => "csv",
            DataFormat::Json => "json",
        }
    }
}

/// Input names: `gaussian`, `ground` and `excited` select bundled fixtures,
/// anything else is a `.csv` or `.json` path.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the identity catalog A1–A20.
    Axioms,
    /// Weyl-quantize a phase-space function into an operator kernel.
    Quantize {
        #[arg(long, default_value = "gaussian")]
        input: String,
    },
    /// Recover the phase-space function of an operator kernel.
    Recover {
        #[arg(long)]
        input: PathBuf,
        /// Function to compare the recovery against.
        #[arg(long)]
        reference: Option<String>,
    },
    /// Wigner distribution of a wave function.
    Wigner {
        #[arg(long, default_value = "ground")]
        state: String,
    },
    /// Moyal product of two phase-space functions.
    Star {
        #[arg(long, default_value = "gaussian")]
        left: String,
        #[arg(long, default_value = "gaussian-shifted")]
        right: String,
    },
    /// Plancherel residual of a phase-space function.
    Plancherel {
        #[arg(long, default_value = "gaussian")]
        input: String,
    },
    /// Catalog plus every numerical check, aggregated.
    Suite,
}

/// Rewrites `--tol.CHECK=VALUE` and `--tol.CHECK VALUE` into
/// `--tol CHECK=VALUE`.
pub fn normalize_tol_flags(args: impl IntoIterator<Item = String>) -> Vec<String> {
    let mut out = Vec::new();
    let mut it = args.into_iter().peekable();
    while let Some(a) = it.next() {
        match a.strip_prefix("--tol.") {
            Some(rest) if rest.contains('=') => {
                out.push("--tol".into());
                out.push(rest.to_string());
            }
            Some(rest) => {
                out.push("--tol".into());
                let value = it.next().unwrap_or_default();
                out.push(format!("{rest}={value}"));
            }
            None => out.push(a),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn dotted_tolerance_flags() {
        let got = normalize_tol_flags(strings(&["p", "--tol.weyl.trace=1e-3", "--tol.moyal.duality", "2", "suite"]));
        assert_eq!(got, strings(&["p", "--tol", "weyl.trace=1e-3", "--tol", "moyal.duality=2", "suite"]));
    }

    #[test]
    fn parses_global_flags_after_subcommand() {
        let cli = Cli::try_parse_from(strings(&["p", "suite", "--grid-n", "32", "--hbar", "0.1"])).unwrap();
        assert_eq!(cli.common.grid_n, Some(32));
        assert!(matches!(cli.command, Command::Suite));
    }
}
