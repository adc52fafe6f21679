//! The `sweep` subcommand: evaluate a grid and emit CSV or JSON rows.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};
use subpack::{closed_form, Parameters};

use crate::range::{parse_range, RangeIncl};

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Server-count range, inclusive (e.g. 2..4)
    #[arg(short = 'N', long = "servers", value_name = "RANGE", value_parser = parse_range)]
    pub n: RangeIncl,
    /// Message-count range, inclusive
    #[arg(short = 'K', long = "messages", value_name = "RANGE", value_parser = parse_range)]
    pub k: RangeIncl,
    /// Demand-count range, inclusive
    #[arg(short = 'D', long = "demands", value_name = "RANGE", value_parser = parse_range)]
    pub d: RangeIncl,
    /// Output encoding
    #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
    pub format: SweepFormat,
    /// Output file; standard output when omitted
    #[arg(short, long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFormat {
    Csv,
    Json,
}

/// One evaluated triple. Arbitrary-precision fields are decimal strings so
/// that any CSV or JSON consumer can read them without overflow.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "K")]
    pub k: u64,
    #[serde(rename = "D")]
    pub d: u64,
    #[serde(rename = "T")]
    pub t: u64,
    #[serde(rename = "S")]
    pub s: u64,
    #[serde(rename = "L_numerator")]
    pub l_numerator: String,
    #[serde(rename = "L_denominator")]
    pub l_denominator: String,
    pub subpacketization: String,
    pub multiplier: String,
}

pub fn evaluate(params: &Parameters) -> SweepRecord {
    let shape = params.shape();
    let result = closed_form::subpacketization_level(params);
    SweepRecord {
        n: params.n(),
        k: params.k(),
        d: params.d(),
        t: shape.t,
        s: shape.s,
        l_numerator: result.level.numer().to_string(),
        l_denominator: result.level.denom().to_string(),
        subpacketization: result.subpacketization.to_string(),
        multiplier: result.multiplier.to_string(),
    }
}

/// Rows for every valid triple in lexicographic `(N, K, D)` order, plus the
/// count of skipped invalid combinations.
pub fn collect_rows(n: RangeIncl, k: RangeIncl, d: RangeIncl) -> (Vec<SweepRecord>, usize) {
    let mut rows = Vec::new();
    let mut skipped = 0;
    for n in n.iter() {
        for k in k.iter() {
            for d in d.iter() {
                match Parameters::new(n, k, d) {
                    Ok(params) => rows.push(evaluate(&params)),
                    Err(_) => skipped += 1,
                }
            }
        }
    }
    (rows, skipped)
}

pub fn write_rows(
    rows: &[SweepRecord],
    format: SweepFormat,
    sink: &mut dyn Write,
) -> anyhow::Result<()> {
    match format {
        SweepFormat::Csv => {
            let mut writer = csv::Writer::from_writer(sink);
            for row in rows {
                writer.serialize(row)?;
            }
            writer.flush()?;
        }
        SweepFormat::Json => {
            serde_json::to_writer_pretty(&mut *sink, rows)?;
            sink.write_all(b"\n")?;
        }
    }
    Ok(())
}

pub fn run(args: &SweepArgs) -> anyhow::Result<ExitCode> {
    let (rows, skipped) = collect_rows(args.n, args.k, args.d);

    match &args.output {
        Some(path) => {
            let mut file = File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))?;
            write_rows(&rows, args.format, &mut file)
                .with_context(|| format!("cannot write {}", path.display()))?;
        }
        None => {
            let stdout = std::io::stdout();
            write_rows(&rows, args.format, &mut stdout.lock())?;
        }
    }

    eprintln!(
        "sweep: {} rows, {} invalid combinations skipped",
        rows.len(),
        skipped
    );
    Ok(ExitCode::SUCCESS)
}
