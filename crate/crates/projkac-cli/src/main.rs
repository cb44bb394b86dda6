//! `projkac`: drives the identity catalog and the phase-space pipelines and
//! writes JSON reports.
//!
//! Exit codes: 0 when every check passes, 1 on a check failure, 2 on bad
//! input.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{normalize_tol_flags, Cli};
use commands::{run, Failure};

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(normalize_tol_flags(std::env::args())) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
