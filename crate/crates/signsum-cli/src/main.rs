//! `signsum` — compute, bound, and search extremal signed k-term subset
//! sums of unit-vector systems.
//!
//! Exit codes: 0 success, 2 precondition violation, 3 budget exceeded or
//! non-convergence, 4 I/O failure.

mod commands;
mod config_file;
mod output;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "signsum",
    version,
    about = "Extremal signed k-term subset sums of unit-vector systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a configuration file
    Gen(commands::gen::GenArgs),
    /// Maximize the signed k-term subset sum of a configuration
    Solve(commands::solve::SolveArgs),
    /// Print every applicable closed-form bound at (d, n, k)
    Bounds(commands::bounds::BoundsArgs),
    /// Search for a configuration minimizing the inner maximum
    Minimax(commands::minimax::MinimaxArgs),
    /// Batch-run solvers and bounds over parameter ranges into a CSV table
    Table(commands::table::TableArgs),
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => commands::gen::run(args),
        Command::Solve(args) => commands::solve::run(args),
        Command::Bounds(args) => commands::bounds::run(args),
        Command::Minimax(args) => commands::minimax::run(args),
        Command::Table(args) => commands::table::run(args),
    };
    if let Err(err) = result {
        eprintln!("error: {err:#}");
        std::process::exit(exit_code(&err));
    }
}

fn exit_code(err: &anyhow::Error) -> i32 {
    if let Some(core) = err.downcast_ref::<signsum_core::Error>() {
        return match core {
            signsum_core::Error::BudgetExceeded { .. }
            | signsum_core::Error::NonConvergence(_) => 3,
            _ => 2,
        };
    }
    if err.downcast_ref::<std::io::Error>().is_some() {
        return 4;
    }
    2
}
