//! `cohom1`: catalog, classify, sample, and verify cohomogeneity-one
//! isometric actions on Minkowski spaces.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 input acts with cohomogeneity other than one, 4 input basis is not
//! closed under the bracket, 5 output path unwritable.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cohom1_cli::commands::{self, CliFailure, CloudFormat, Suite};

#[derive(Parser)]
#[command(
    name = "cohom1",
    version,
    about = "Numerical toolkit for cohomogeneity-one isometric actions on Minkowski spaces",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalogued actions for an ambient dimension.
    Catalog {
        /// Ambient dimension of the Minkowski space (>= 2).
        #[arg(long)]
        dim: usize,
    },
    /// Classify a subalgebra read from a JSON basis file.
    Classify {
        /// Path to the JSON file holding the basis.
        file: PathBuf,
        /// Residual above which a successful classification is flagged.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Sample an orbit through a point and write the labelled cloud.
    Orbit {
        /// Action name as printed by `catalog` (e.g. AN, KxRe3, ALambdaEll).
        #[arg(long)]
        action: String,
        /// Family parameter; required for ALambdaEll, rejected otherwise.
        #[arg(long)]
        lambda: Option<f64>,
        /// Base point as comma-separated coordinates; its length fixes the
        /// ambient dimension.
        #[arg(long)]
        point: String,
        /// Number of orbit samples to draw.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// RNG seed (overrides COHOM1_SEED).
        #[arg(long)]
        seed: Option<u64>,
        /// Output file path.
        #[arg(long)]
        out: PathBuf,
        /// Output format.
        #[arg(long, value_enum, default_value_t = CloudFormat::Csv)]
        format: CloudFormat,
    },
    /// Estimate the cohomogeneity of a catalogued action by randomized rank.
    Cohomogeneity {
        /// Action name as printed by `catalog`.
        #[arg(long)]
        action: String,
        /// Family parameter; required for ALambdaEll, rejected otherwise.
        #[arg(long)]
        lambda: Option<f64>,
        /// Ambient dimension; defaults to the smallest that carries the action.
        #[arg(long)]
        dim: Option<usize>,
        /// Number of random base points to test.
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        /// RNG seed (overrides COHOM1_SEED).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run the verification checks and report pass/fail per check.
    Verify {
        /// Which checks to run.
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// RNG seed (overrides COHOM1_SEED).
        #[arg(long)]
        seed: Option<u64>,
        /// Trials per randomized check.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Comma-separated drift parameters for the equivalence suite.
        #[arg(long)]
        lambda: Option<String>,
    },
}

/// Explicit --seed wins, then the COHOM1_SEED environment variable, then 0.
fn resolve_seed(flag: Option<u64>) -> Result<u64, CliFailure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("COHOM1_SEED") {
        Ok(text) => text.parse::<u64>().map_err(|e| {
            CliFailure::Usage(format!("COHOM1_SEED must be an unsigned integer, got {text:?}: {e}"))
        }),
        Err(_) => Ok(0),
    }
}

fn run(cli: Cli) -> Result<String, CliFailure> {
    match cli.command {
        Command::Catalog { dim } => commands::cmd_catalog(dim),
        Command::Classify { file, tol } => commands::cmd_classify(&file, tol),
        Command::Orbit { action, lambda, point, samples, seed, out, format } => {
            let seed = resolve_seed(seed)?;
            commands::cmd_orbit(&action, lambda, &point, samples, seed, &out, format)
        }
        Command::Cohomogeneity { action, lambda, dim, trials, seed } => {
            let seed = resolve_seed(seed)?;
            commands::cmd_cohomogeneity(&action, lambda, dim, trials, seed)
        }
        Command::Verify { suite, seed, trials, lambda } => {
            let seed = resolve_seed(seed)?;
            commands::cmd_verify(suite, seed, trials, lambda.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            // Failure reports go to stdout so classify/verify output stays
            // in one stream; the exit code carries the machine-readable
            // outcome.
            let msg = failure.message();
            if msg.ends_with('\n') {
                print!("{msg}");
            } else {
                println!("{msg}");
            }
            ExitCode::from(failure.exit_code() as u8)
        }
    }
}
