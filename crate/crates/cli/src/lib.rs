//! Command-line front end for `ramloci`: certification runs over the
//! parameter grid and ramification computations on explicit curves.

pub mod config;
pub mod curve;
pub mod error;
pub mod parse;
pub mod verify;

use std::io::Write;

use clap::{Args, Parser, Subcommand};

pub use config::{Format, RunConfig, Span};
pub use error::{exit, CliError};
pub use parse::{parse_curve, parse_poly};

#[derive(Debug, Parser)]
#[command(
    name = "ramloci",
    version,
    about = "Ramification loci: formula certification and curve weights"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify the closed-form degree formulas against the Chow-ring engine.
    Verify(VerifyArgs),
    /// Compute bases, order sequences, weights or torsion loci on a curve.
    Curve {
        #[command(subcommand)]
        action: CurveAction,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Genus range, e.g. 1..9 (inclusive).
    #[arg(long = "g", value_name = "RANGE", default_value = "1..9")]
    pub g: Span,
    /// Range of i, e.g. 0..8 (inclusive).
    #[arg(long = "i", value_name = "RANGE", default_value = "0..8")]
    pub i: Span,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Only run cases whose name matches this glob.
    #[arg(long, value_name = "GLOB")]
    pub filter: Option<String>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "RAMLOCI_JOBS")]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// Equation such as "y^2 = x^3 - x".
    pub model: String,
    /// The system is omega((i+1) P_inf); -1 gives the canonical system.
    #[arg(long = "i", default_value_t = 1, allow_negative_numbers = true)]
    pub i: i64,
    /// Largest number of series coefficients tried before giving up.
    #[arg(long, default_value_t = ramloci::curves::PrecisionPolicy::DEFAULT_CAP)]
    pub precision_cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum CurveAction {
    /// Monomial basis of the system.
    Basis(CurveArgs),
    /// Vanishing orders of the system at a place.
    Orders {
        #[command(flatten)]
        args: CurveArgs,
        /// inf, a branch point X, or an ordinary point X,Y.
        #[arg(long, default_value = "inf")]
        place: String,
    },
    /// Weight at every branch place plus the aggregate elsewhere.
    Weights {
        #[command(flatten)]
        args: CurveArgs,
        /// Fail unless every branch point is rational.
        #[arg(long)]
        require_split: bool,
    },
    /// Compare ramification of V(i) with the (i+1)-torsion (genus 1 only).
    Torsion(CurveArgs),
}

impl VerifyArgs {
    pub fn config(&self) -> RunConfig {
        let jobs = self.jobs.unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        });
        RunConfig {
            g: self.g.0.clone(),
            i: self.i.0.clone(),
            format: self.format,
            filter: self.filter.clone(),
            jobs: jobs.max(1),
            ..RunConfig::default()
        }
    }
}

/// Runs a parsed command, writing the report to `out`. Returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Verify(args) => verify::cmd_verify(&args.config(), out),
        Command::Curve { action } => curve::cmd_curve(action, out),
    }
}

/// Entry point shared by the binary: parses arguments, runs, reports errors.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::PASS
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                // Argument errors share one stable code.
                let tagged = match rendered.strip_prefix("error:") {
                    Some(rest) => format!("error[{}]:{rest}", error::ARGUMENT_ERROR),
                    None => rendered,
                };
                write!(err, "{tagged}")
            } else {
                write!(out, "{rendered}")
            };
            return status;
        }
    };
    match run(&cli, out) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            e.exit_code()
        }
    }
}
