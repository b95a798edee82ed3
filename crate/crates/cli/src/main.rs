//! `giso`: quasi-exact and numerical spectra of the generalized isotonic
//! oscillator.

mod commands;
mod emit;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use emit::Format;
use giso_core::Error;

#[derive(Parser, Debug)]
#[command(name = "giso", version, about = "Spectra of the generalized isotonic oscillator")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Working precision in decimal digits.
    #[arg(long, global = true, default_value_t = 60, env = "GISO_DIGITS")]
    pub digits: u32,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    /// Output format; tables default to tsv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Significant decimals in emitted numbers.
    #[arg(long, global = true, default_value_t = 15)]
    pub decimals: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lowest eigenvalues by the asymptotic iteration method.
    Aim(commands::AimArgs),
    /// Quasi-exact solutions with a degree-k factor in t = x^2/(1+x^2).
    Quasi(commands::QuasiArgs),
    /// Case a^2 w free: the polynomial Q and its physical roots.
    Case2(commands::Case2Args),
    /// The exactly solvable family l = -1, wa2 = 1/2, g = 2.
    Exact(commands::ExactArgs),
    /// Sample a closed-form wavefunction and the potential.
    Wavefunction(commands::WaveArgs),
    /// Finite-difference reference eigenvalues.
    Oracle(commands::OracleArgs),
    /// Compare against a printed table or figure.
    Reproduce(commands::ReproArgs),
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::Unphysical(_) | Error::NoRealBranch(_) => 2,
        Error::NotStabilized { .. }
        | Error::CutoffTooSmall { .. }
        | Error::GridTooCoarse { .. }
        | Error::Quadrature(_)
        | Error::InsufficientDepth { .. } => 3,
        Error::FactorizationViolated { .. } => 4,
        Error::Disagreement { .. } | Error::NotProportional { .. } | Error::ScalingMismatch { .. } => 5,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = cli.global.clone();
    let (result, default_format) = match &cli.command {
        Command::Aim(a) => (commands::aim(a, &g), Format::Json),
        Command::Quasi(a) => (commands::quasi(a, &g), Format::Json),
        Command::Case2(a) => (commands::case2(a, &g), Format::Json),
        Command::Exact(a) => (commands::exact(a, &g), Format::Json),
        Command::Wavefunction(a) => (commands::wavefunction(a, &g), Format::Tsv),
        Command::Oracle(a) => (commands::oracle(a, &g), Format::Json),
        Command::Reproduce(a) => (commands::reproduce(a, &g), Format::Json),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let format = g.format.unwrap_or(default_format);
    let bytes = match emit::render(&outcome.emission, format) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let written = match &g.out {
        Some(path) => std::fs::write(path, &bytes).map_err(|e| e.to_string()),
        None => std::io::stdout().write_all(&bytes).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    for line in &outcome.stderr {
        eprintln!("{line}");
    }
    ExitCode::from(outcome.code)
}
