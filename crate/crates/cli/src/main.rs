//! `isospec`: reproducible experiments on isospectral sphere metrics.

mod commands;
mod config;
mod examples;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use isospec_core::Error as CoreError;

use config::{Example, Format, Overrides, Settings};

#[derive(Parser, Debug)]
#[command(name = "isospec", version, about = "Isospectral metrics on odd spheres")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// TOML experiment file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    example: Option<Example>,
    /// Comma-separated family parameters.
    #[arg(long, global = true, value_delimiter = ',', allow_negative_numbers = true)]
    t: Option<Vec<f64>>,
    /// Polynomial basis degree.
    #[arg(long, global = true)]
    degree: Option<usize>,
    /// Comma-separated quadrature levels, each `RADIAL:ANGULAR`.
    #[arg(long, global = true)]
    quad_orders: Option<String>,
    /// Tolerance for the command's verdict.
    #[arg(long, global = true, allow_negative_numbers = true)]
    tol: Option<f64>,
    /// Support volume bound as a fraction of the sphere volume.
    #[arg(long, global = true, allow_negative_numbers = true)]
    eps: Option<f64>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Equivalence invariants, commutant dimensions and isospectrality.
    Invariants,
    /// Galerkin spectra of the configured pair at each quadrature level.
    Spectrum {
        /// Compute the undeformed metric and compare with the round spectrum.
        #[arg(long)]
        zero_form: bool,
    },
    /// Pointwise identities behind isospectrality.
    Verify,
    /// Localized deformation by a bump profile.
    Bump,
}

fn settings(cli: &Cli) -> Result<Settings> {
    let file = match &cli.config {
        Some(p) => config::load(p)?,
        None => Default::default(),
    };
    let overrides = Overrides {
        example: cli.example,
        t: cli.t.clone(),
        degree: cli.degree,
        quad_orders: cli.quad_orders.clone(),
        tol: cli.tol,
        eps: cli.eps,
        seed: cli.seed,
        out: cli.out.clone(),
        format: cli.format,
        zero_form: matches!(cli.command, Command::Spectrum { zero_form: true }),
    };
    Settings::resolve(file, overrides)
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("ISOSPEC_THREADS") {
        let n: usize = v.parse().map_err(|_| anyhow::anyhow!("ISOSPEC_THREADS must be a positive integer, got {v:?}"))?;
        anyhow::ensure!(n > 0, "ISOSPEC_THREADS must be positive");
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

/// Errors caused by the configuration rather than by the experiment.
fn is_usage_error(e: &anyhow::Error) -> bool {
    match e.downcast_ref::<CoreError>() {
        Some(err) => matches!(
            err,
            CoreError::InvalidOrders(_)
                | CoreError::InvalidDegree(_)
                | CoreError::InvalidBump(_)
                | CoreError::InvalidPair(_)
                | CoreError::SymmetryViolation { .. }
                | CoreError::FormMismatch { .. }
                | CoreError::DimensionMismatch { .. }
        ),
        None => true,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let s = match init_threads().and_then(|_| settings(&cli)) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let result = match cli.command {
        Command::Invariants => commands::invariants(&s),
        Command::Spectrum { .. } => commands::spectrum(&s),
        Command::Verify => commands::verify(&s),
        Command::Bump => commands::bump(&s),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verdict: FAIL");
            ExitCode::from(2)
        }
        Err(e) if is_usage_error(&e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("failed: {e:#}");
            ExitCode::from(2)
        }
    }
}
