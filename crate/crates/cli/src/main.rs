use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod error;
mod io;

use commands::Op;
use error::CliError;

/// Sine-cosine transforms, gamma-matrix preconditioners and Toeplitz solves.
///
/// Exit codes: 0 success, 1 file error, 2 bad arguments or sizes, 3 operation
/// count mismatch, 4 singular preconditioner or oracle disagreement, 5 solver
/// did not converge.
#[derive(Debug, Parser)]
#[command(name = "gamma", version)]
struct Cli {
    /// Seed for every randomly generated input.
    #[arg(long, global = true, env = "GAMMA_SEED", default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply the IDSCT (Q^T x) or the DSCT (Q t) to a vector file.
    Transform {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
        /// Append measured and predicted operation counts to the output and
        /// print a JSON report.
        #[arg(long)]
        counts: bool,
    },
    /// Check CS/SN operation counts against the closed forms for n = 4..=N.
    VerifyCounts {
        #[arg(long)]
        max_n: usize,
        /// Also write the table as JSON.
        #[arg(long = "out")]
        output: Option<PathBuf>,
    },
    /// Optimal gamma approximation of a symmetric Toeplitz matrix.
    Precond {
        /// First column of the Toeplitz matrix.
        #[arg(long)]
        toeplitz: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
        /// Compare with the dense projection oracle (n <= 128).
        #[arg(long)]
        oracle_check: bool,
    },
    /// Clustering of the preconditioned spectrum around 1.
    Spectrum {
        #[arg(long)]
        toeplitz: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        epsilon: f64,
        #[arg(long = "out")]
        output: PathBuf,
    },
    /// Solve T x = rhs by (preconditioned) conjugate gradient.
    Solve {
        #[arg(long)]
        toeplitz: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
        #[arg(long)]
        no_precond: bool,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 1000)]
        maxit: usize,
        #[arg(long = "out")]
        output: PathBuf,
    },
    /// Write the first column of a Toeplitz matrix built from a generator.
    Toeplitz {
        /// Comma-separated t_0, t_1, ...
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        coeffs: Option<Vec<f64>>,
        /// t_j = RATIO^j for j = 0..=terms.
        #[arg(long)]
        geometric: Option<f64>,
        #[arg(long, default_value_t = 30)]
        terms: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "out")]
        output: PathBuf,
    },
    /// Write a vector of uniform samples in [-1, 1) drawn from --seed.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long = "out")]
        output: PathBuf,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Transform {
            op,
            input,
            output,
            counts,
        } => commands::transform(op, &input, &output, counts),
        Command::VerifyCounts { max_n, output } => commands::verify_counts(max_n, cli.seed, output.as_ref()),
        Command::Precond {
            toeplitz,
            output,
            oracle_check,
        } => commands::precond(&toeplitz, &output, oracle_check),
        Command::Spectrum {
            toeplitz,
            epsilon,
            output,
        } => commands::spectrum(&toeplitz, epsilon, &output),
        Command::Solve {
            toeplitz,
            rhs,
            no_precond,
            tol,
            maxit,
            output,
        } => commands::solve(&toeplitz, &rhs, no_precond, tol, maxit, &output),
        Command::Toeplitz {
            coeffs,
            geometric,
            terms,
            n,
            output,
        } => commands::toeplitz(coeffs.as_deref(), geometric.map(|r| (r, terms)), n, &output),
        Command::Random { n, output } => commands::random(n, cli.seed, &output),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gamma: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
