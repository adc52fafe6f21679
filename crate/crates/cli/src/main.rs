//! `subpack` — exact subpacketization levels for multi-message private
//! information retrieval, with sweep, verification, and benchmark tooling.
//!
//! Exit codes: 0 on success, 1 when a verification or cross-check fails,
//! 2 on usage or parameter-validation errors.

mod bench;
mod compute;
mod range;
mod sweep;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "subpack",
    version,
    about = "Exact subpacketization levels for multi-message private information retrieval"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute L, the subpacketization level, and the shape quantities for one triple
    Compute(compute::ComputeArgs),
    /// Evaluate a grid of triples and write CSV or JSON rows
    Sweep(sweep::SweepArgs),
    /// Machine-check every identity behind the closed form over a grid
    Verify(verify::VerifyArgs),
    /// Time the recursion path against the closed-form path
    Bench(bench::BenchArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Compute(args) => compute::run(args),
        Command::Sweep(args) => sweep::run(args),
        Command::Verify(args) => verify::run(args),
        Command::Bench(args) => bench::run(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
