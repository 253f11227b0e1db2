mod config;
mod output;
mod studies;

use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use config::{Command, RunConfig};
use studies::Report;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn finish<T: Serialize>(name: &str, report: Report<T>, cfg: &RunConfig) -> ExitCode {
    let bytes = match output::render(&report.rows, cfg.format) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("hexfour: cannot encode output: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if let Err(e) = output::emit(&bytes, cfg.out.as_deref()) {
        eprintln!("hexfour: cannot write output: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    if report.passed {
        eprintln!("{name}: {} rows, all checks passed", report.rows.len());
        ExitCode::SUCCESS
    } else {
        eprintln!("{name}: {} rows, some checks FAILED", report.rows.len());
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn main() -> ExitCode {
    let cfg = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(msg) = cfg.validate() {
        eprintln!("hexfour: {msg}");
        return ExitCode::from(EXIT_USAGE);
    }
    match cfg.command {
        Command::Orthogonality => finish("orthogonality", studies::orthogonality(&cfg), &cfg),
        Command::Lebesgue => finish("lebesgue", studies::lebesgue(&cfg), &cfg),
        Command::Cubature => finish("cubature", studies::cubature(&cfg), &cfg),
        Command::Interp => finish("interp", studies::interp(&cfg), &cfg),
    }
}
