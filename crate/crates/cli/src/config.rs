use std::fmt;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Orthogonality,
    Lebesgue,
    Cubature,
    Interp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Builtin test functions for the interpolation study.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Function {
    /// `exp(x)` in deltoid coordinates; entire and symmetric.
    Smooth,
    /// `|x|` in deltoid coordinates; Lipschitz only.
    Kink,
    /// A single generalized cosine (sine for the sine operator) of degree 4.
    Tc4,
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Function::Smooth => "smooth",
            Function::Kink => "kink",
            Function::Tc4 => "tc4",
        })
    }
}

#[derive(Debug, Parser)]
#[command(name = "hexfour", version, about = "Reproduction studies for hexagonal and triangular Fourier analysis")]
pub struct RunConfig {
    /// Study to run.
    #[arg(value_enum)]
    pub command: Command,

    /// Comma separated list of orders.
    #[arg(long = "n", value_delimiter = ',', default_value = "4,8,16")]
    pub n: Vec<usize>,

    /// Steps per edge of the evaluation grid.
    #[arg(long, default_value_t = 64)]
    pub grid: usize,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, value_enum, default_value_t = Function::Smooth)]
    pub function: Function,

    /// Scale every discrete inner product by 1.001 (negative control).
    #[arg(long, hide = true)]
    pub inject_weight_error: bool,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.n.is_empty() {
            return Err("--n must list at least one order".into());
        }
        let min_n = match self.command {
            Command::Orthogonality | Command::Cubature => 1,
            Command::Lebesgue | Command::Interp => 3,
        };
        if let Some(bad) = self.n.iter().find(|&&n| n < min_n) {
            return Err(format!("order {bad} is below the minimum {min_n} for this study"));
        }
        if self.command == Command::Lebesgue && self.n.windows(2).any(|w| w[0] >= w[1]) {
            return Err("--n must be strictly increasing for the lebesgue study".into());
        }
        if self.grid < 8 {
            return Err("--grid must be at least 8".into());
        }
        Ok(())
    }
}
