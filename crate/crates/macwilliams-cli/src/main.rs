//! Command-line front end for exact MacWilliams-type computations over
//! finite chain rings: enumerators, duals, Krawtchouk matrices,
//! identity verification, counterexample search, and linear-programming
//! bounds. Exit codes: 0 success, 1 a requested check failed, 2 bad
//! configuration (including exceeded enumeration guards).

mod commands;
mod config;
mod golden;
mod output;

use clap::{Parser, Subcommand};

use commands::{Ctx, Failure};
use output::OutputFormat;

#[derive(Parser)]
#[command(name = "macwilliams", version, about = None)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Worker threads for row-parallel computations. Results are
    /// merged in a fixed order, so output is identical for any value.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decomposition or weight enumerator of a code.
    Enumerate(commands::EnumerateArgs),
    /// Dual code of a code.
    Dual(commands::DualArgs),
    /// Full Krawtchouk coefficient matrix for a ring and partition.
    Krawtchouk(commands::KrawtchoukArgs),
    /// Check MacWilliams identities for a code against its brute-force dual.
    Verify(commands::VerifyArgs),
    /// Search for two codes with equal weight enumerators but distinct
    /// dual weight enumerators.
    Counterexample(commands::CounterexampleArgs),
    /// Certified exact linear-programming bound on code size.
    LpBound(commands::LpBoundArgs),
    /// Run the built-in reference cases against their known values.
    Examples,
}

fn main() {
    let cli = Cli::parse();
    let guard = match config::guard_limit() {
        Ok(guard) => guard,
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    };
    let ctx = Ctx {
        format: cli.format,
        jobs: cli.jobs,
        guard,
    };
    let outcome = match &cli.command {
        Command::Enumerate(args) => commands::enumerate(args, &ctx),
        Command::Dual(args) => commands::dual(args, &ctx),
        Command::Krawtchouk(args) => commands::krawtchouk(args, &ctx),
        Command::Verify(args) => commands::verify(args, &ctx),
        Command::Counterexample(args) => commands::counterexample(args, &ctx),
        Command::LpBound(args) => commands::lp_bound(args, &ctx),
        Command::Examples => commands::examples(&ctx),
    };
    match outcome {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            std::process::exit(1);
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}
