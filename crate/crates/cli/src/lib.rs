//! Command-line front end for `zetasum`.
//!
//! [`run`] parses arguments, performs one computation (or one per value of
//! `--alpha-range`) and writes [`OutputRecord`]s to the given writer.
//!
//! Exit codes: 0 on success, 1 on a usage or domain error, 2 when `--strict`
//! is set and a numeric evaluation did not converge.

mod commands;
pub mod parse;
pub mod record;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use record::{Diagnostics, Float, OutputRecord, ResultValue, TracePoint};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NOT_CONVERGED: i32 = 2;

/// Environment variable holding the default `--format`.
pub const FORMAT_ENV: &str = "ZETASUM_FORMAT";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `key: value` lines, records separated by a blank line.
    Text,
    /// One JSON object per line.
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "zetasum",
    version,
    about = "Cesàro limits, finite parts and zeta special values"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, env = FORMAT_ENV, global = true)]
    pub format: Format,

    /// Exit with status 2 when a numeric evaluation does not converge.
    #[arg(long, global = true)]
    pub strict: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct EstimateArgs {
    /// Exponent α; the estimate is of ζ(−α) (or ζ′(−α)).
    #[arg(long, allow_negative_numbers = true, required_unless_present = "alpha_range")]
    pub alpha: Option<f64>,
    /// Sweep α over start:end:step instead of a single value.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "alpha")]
    pub alpha_range: Option<String>,
    /// Cesàro order k (default max(0, ⌈α⌉ + 1)).
    #[arg(long)]
    pub order: Option<u32>,
    #[arg(long, default_value_t = 1e4)]
    pub xmax: f64,
    #[arg(long, default_value_t = 1e-3)]
    pub tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bernoulli number B_N (B_1 = −1/2).
    Bernoulli { n: usize },
    /// Σ_{k=1}^{M−1} k^N.
    Faulhaber { n: u32, m: u64 },
    /// Exact ζ(S) for a non-positive integer S.
    Zeta {
        #[arg(allow_negative_numbers = true)]
        s: i64,
    },
    /// Numeric ζ(−α) as the Cesàro limit of the power-sum staircase.
    ZetaEstimate(EstimateArgs),
    /// Numeric ζ′(−α) from the log-weighted staircase.
    ZetaPrimeEstimate(EstimateArgs),
    /// (C,k) sum of a built-in series: alt-sign, alt-sign-n, alt-harmonic,
    /// geometric R, power-P.
    CesaroSum {
        series: String,
        #[arg(allow_negative_numbers = true)]
        param: Option<f64>,
        #[arg(long, default_value_t = 1)]
        order: u32,
        #[arg(long, default_value_t = 10_000)]
        terms: u64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Search for the smallest summing order up to --order.
        #[arg(long)]
        detect: bool,
    },
    /// Cesàro (Riesz) mean of ∫_0^∞ f for a built-in integrand: sin A,
    /// cos A, exp-decay R, square-wave, const C.
    CesaroInt {
        integrand: String,
        #[arg(allow_negative_numbers = true)]
        param: Option<f64>,
        /// Real order k > −1.
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        order: f64,
        #[arg(long, default_value_t = 1e5)]
        xmax: f64,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// F.p.∫_0^B t^α dt.
    FpInt {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "1")]
        upper: String,
    },
    /// F.p.∫_0^B t^α ln t dt.
    FpLogInt {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "1")]
        upper: String,
    },
    /// Periodic coefficient polynomial P_M({x}) of Σ_{k≤x} k^N − x^{N+1}/(N+1).
    PmPoly { n: u32, m: u32 },
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = e.print();
                    EXIT_ERROR
                }
            };
        }
    };
    log::debug!("{:?}", cli.command);
    let records = match commands::execute(&cli.command) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_ERROR;
        }
    };
    let mut all_converged = true;
    for (i, r) in records.iter().enumerate() {
        all_converged &= r.converged();
        let written = match cli.format {
            Format::Text => {
                let sep = if i > 0 { writeln!(out) } else { Ok(()) };
                sep.and_then(|_| r.write_text(out))
            }
            Format::Structured => r.write_json(out),
        };
        if let Err(e) = written {
            eprintln!("error: cannot write output: {e}");
            return EXIT_ERROR;
        }
    }
    if cli.strict && !all_converged {
        log::warn!("evaluation did not converge");
        EXIT_NOT_CONVERGED
    } else {
        EXIT_OK
    }
}
