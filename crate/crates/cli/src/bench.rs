//! The `bench` subcommand: time the recursion path against the closed form.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Args;
use subpack::{closed_form, recursion, Parameters};

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Number of servers (N > 1)
    #[arg(short = 'N', long = "servers", value_name = "N")]
    pub n: u64,
    /// Total number of messages (K > D)
    #[arg(short = 'K', long = "messages", value_name = "K")]
    pub k: u64,
    /// Number of demand messages (D > 1)
    #[arg(short = 'D', long = "demands", value_name = "D")]
    pub d: u64,
    /// Repetitions to average over
    #[arg(short, long, default_value_t = 10)]
    pub repetitions: u32,
}

pub fn run(args: &BenchArgs) -> anyhow::Result<ExitCode> {
    let params = match Parameters::new(args.n, args.k, args.d) {
        Ok(params) => params,
        Err(err) => {
            eprintln!("error: {err}");
            return Ok(ExitCode::from(2));
        }
    };
    if args.repetitions == 0 {
        eprintln!("error: requires at least one repetition");
        return Ok(ExitCode::from(2));
    }

    let mut recursion_total = Duration::ZERO;
    let mut closed_total = Duration::ZERO;
    let mut mismatches = 0u32;
    for _ in 0..args.repetitions {
        let start = Instant::now();
        let via_recursion = recursion::normalized_level(&params);
        recursion_total += start.elapsed();

        let start = Instant::now();
        let via_closed = closed_form::normalized_level(&params);
        closed_total += start.elapsed();

        if via_recursion != via_closed {
            mismatches += 1;
        }
    }

    println!("{params}, {} repetitions", args.repetitions);
    println!(
        "recursion:   {:>12.3?} per evaluation",
        recursion_total / args.repetitions
    );
    println!(
        "closed form: {:>12.3?} per evaluation",
        closed_total / args.repetitions
    );

    if mismatches == 0 {
        println!("all outputs equal");
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "error: outputs disagreed on {mismatches} of {} repetitions",
            args.repetitions
        );
        Ok(ExitCode::FAILURE)
    }
}
