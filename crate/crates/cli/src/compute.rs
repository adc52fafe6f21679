//! The `compute` subcommand: one triple, full report.

use std::process::ExitCode;

use clap::{Args, ValueEnum};
use num_bigint::BigUint;
use subpack::{closed_form, genfunc, recursion, Parameters, Rational};

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Number of servers (N > 1)
    #[arg(short = 'N', long = "servers", value_name = "N")]
    pub n: u64,
    /// Total number of messages (K > D)
    #[arg(short = 'K', long = "messages", value_name = "K")]
    pub k: u64,
    /// Number of demand messages (D > 1)
    #[arg(short = 'D', long = "demands", value_name = "D")]
    pub d: u64,
    /// Evaluation path; `both` cross-checks the two for equality
    #[arg(long, value_enum, default_value_t = Via::Closed)]
    pub via: Via,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    /// Closed-form polynomial in N
    Closed,
    /// Exact backward recursion (the oracle)
    Recursion,
    /// Both paths, asserting exact equality
    Both,
}

/// Smallest positive integer multiple of `level` and the multiplier
/// achieving it; with `level = p/q` in lowest terms these are `p` and `q`.
fn integer_multiple(level: &Rational) -> (BigUint, BigUint) {
    (
        level.numer().to_biguint().expect("level is positive"),
        level.denom().to_biguint().expect("denominator is positive"),
    )
}

pub fn run(args: &ComputeArgs) -> anyhow::Result<ExitCode> {
    let params = match Parameters::new(args.n, args.k, args.d) {
        Ok(params) => params,
        Err(err) => {
            eprintln!("error: {err}");
            return Ok(ExitCode::from(2));
        }
    };
    let shape = params.shape();

    let level = match args.via {
        Via::Closed => closed_form::normalized_level(&params),
        Via::Recursion => recursion::normalized_level(&params),
        Via::Both => {
            let closed = closed_form::normalized_level(&params);
            let oracle = recursion::normalized_level(&params);
            if closed != oracle {
                eprintln!(
                    "error: paths disagree for {params}: closed form {closed} vs recursion {oracle}"
                );
                return Ok(ExitCode::FAILURE);
            }
            closed
        }
    };
    let (subpacketization, multiplier) = integer_multiple(&level);
    let filtered = genfunc::expand_coefficients(params.d(), shape.t)
        .expect("valid parameters")
        .filtered();

    println!("N = {}, K = {}, D = {}", params.n(), params.k(), params.d());
    println!("T = {}, S = {}", shape.t, shape.s);
    println!("L = {level}");
    println!("subpacketization = {subpacketization}");
    println!("multiplier = {multiplier}");
    println!(
        "filtered coefficients = [{}]",
        filtered
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    if args.via == Via::Both {
        println!("paths agree: recursion and closed form both give L = {level}");
    }
    Ok(ExitCode::SUCCESS)
}
