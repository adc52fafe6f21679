//! The `verify` subcommand: run every identity check over a parameter grid
//! and summarize the worst residual per identity.

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::Args;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use subpack::verifier::{self, Mode, VerificationReport};
use subpack::{closed_form, recursion, Parameters, Rational};

use crate::range::{parse_grid, GridSpec};

/// Label for the exact closed-form-vs-oracle equivalence check.
pub const EQUIVALENCE: &str = "closed form vs recursion";

/// Exponent sweep for the root-of-unity sums: every `P` with `|P| ≤ 100`.
const EXPONENT_LIMIT: i64 = 100;

/// Fixed rational sample points for the binomial sum identities, as
/// `(numerator, denominator)` pairs; random points are added per `(K, D)`.
const FIXED_SAMPLES: [(i64, i64); 5] = [(0, 1), (1, 1), (-1, 1), (2, 3), (-5, 7)];

/// Number of pseudo-random rational sample points per `(K, D)`.
const RANDOM_SAMPLES: usize = 20;

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Parameter grid to check
    #[arg(long, value_name = "GRID", value_parser = parse_grid,
          default_value = "N=2..8,K=3..14,D=2..8")]
    pub grid: GridSpec,
    /// Tolerance for the floating-point checks
    #[arg(long, default_value_t = verifier::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    /// Cap on N for floating checks (larger cells are checked exactly only)
    #[arg(long, default_value_t = 16, value_name = "N")]
    pub float_max_n: u64,
    /// Cap on K for floating checks
    #[arg(long, default_value_t = 20, value_name = "K")]
    pub float_max_k: u64,
}

/// Worst case seen for one identity across the whole grid.
struct Summary {
    identity: &'static str,
    mode: Mode,
    tolerance: f64,
    checks: usize,
    failures: usize,
    worst: f64,
    worst_relative: bool,
    worst_at: String,
}

impl Summary {
    fn new(identity: &'static str, mode: Mode, tolerance: f64) -> Self {
        Summary {
            identity,
            mode,
            tolerance,
            checks: 0,
            failures: 0,
            worst: 0.0,
            worst_relative: false,
            worst_at: String::from("-"),
        }
    }

    fn absorb(&mut self, report: VerificationReport) {
        debug_assert_eq!(report.identity, self.identity);
        self.checks += 1;
        if !report.passed {
            self.failures += 1;
        }
        if report.residual >= self.worst && (report.residual > 0.0 || self.checks == 1) {
            self.worst = report.residual;
            self.worst_relative = report.relative;
            self.worst_at = report.instance;
        }
    }

    fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Exact equivalence of the two evaluation routes, reported in the same
/// shape as the library's identity checks.
fn equivalence_report(params: &Parameters) -> VerificationReport {
    let closed = closed_form::normalized_level(params);
    let oracle = recursion::normalized_level(params);
    let diff = (closed - oracle).abs();
    let residual = if diff.is_zero() {
        0.0
    } else {
        diff.to_f64()
            .unwrap_or(f64::MAX)
            .clamp(f64::MIN_POSITIVE, f64::MAX)
    };
    VerificationReport {
        identity: EQUIVALENCE,
        instance: params.to_string(),
        mode: Mode::Exact,
        residual,
        relative: false,
        tolerance: 0.0,
        passed: residual == 0.0,
    }
}

/// Deterministic rational sample points with numerators in [-1000, 1000]
/// and denominators in [1, 1000].
fn random_rationals(seed: u64, count: usize) -> Vec<Rational> {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(1);
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        state >> 33
    };
    (0..count)
        .map(|_| {
            let numer = (next() % 2001) as i64 - 1000;
            let denom = (next() % 1000) as i64 + 1;
            Rational::new(BigInt::from(numer), BigInt::from(denom))
        })
        .collect()
}

pub fn run(args: &VerifyArgs) -> anyhow::Result<ExitCode> {
    let (triples, skipped) = args.grid.valid_triples();
    let tol = args.tolerance;

    let mut equivalence = Summary::new(EQUIVALENCE, Mode::Exact, 0.0);
    let mut reversed = Summary::new(verifier::REVERSED_RECURSION, Mode::Exact, 0.0);
    let mut binomials = Summary::new(verifier::BINOMIAL_IDENTITIES, Mode::Exact, 0.0);
    let mut unity_sums = Summary::new(verifier::ROOT_OF_UNITY_SUMS, Mode::Floating, tol);
    let mut roots = Summary::new(verifier::CHARACTERISTIC_ROOTS, Mode::Floating, tol);
    let mut initial = Summary::new(verifier::INITIAL_CONDITIONS, Mode::Floating, tol);
    let mut intermediate = Summary::new(verifier::INTERMEDIATE_FORM, Mode::Floating, tol);
    let mut forms = Summary::new(verifier::ROOT_OF_UNITY_FORMS, Mode::Floating, tol);
    let mut ratios = Summary::new(verifier::RATIO_IDENTITY, Mode::Floating, tol);
    let mut averages = Summary::new(verifier::FILTER_AVERAGE, Mode::Floating, tol);

    for params in &triples {
        equivalence.absorb(equivalence_report(params));
        reversed.absorb(verifier::verify_reversed_recursion(params));
    }

    let pairs: BTreeSet<(u64, u64)> = triples.iter().map(|p| (p.k(), p.d())).collect();
    for &(k, d) in &pairs {
        let mut samples: Vec<Rational> = FIXED_SAMPLES
            .iter()
            .map(|&(n, den)| Rational::new(BigInt::from(n), BigInt::from(den)))
            .collect();
        samples.extend(random_rationals(k << 32 | d, RANDOM_SAMPLES));
        for r in &samples {
            binomials.absorb(verifier::verify_binomial_identities(r, k, d));
        }
    }

    for d in args.grid.d.iter() {
        if d < 2 {
            continue;
        }
        for exponent in -EXPONENT_LIMIT..=EXPONENT_LIMIT {
            unity_sums.absorb(verifier::verify_root_of_unity_sum(d, exponent, tol));
        }
    }

    let floating: Vec<&Parameters> = triples
        .iter()
        .filter(|p| p.n() <= args.float_max_n && p.k() <= args.float_max_k)
        .collect();
    let mut ratio_pairs = BTreeSet::new();
    let mut average_cells = BTreeSet::new();
    for params in &floating {
        roots.absorb(verifier::verify_characteristic_roots(params, tol));
        initial.absorb(verifier::verify_initial_conditions(params, tol));
        intermediate.absorb(verifier::verify_intermediate_level(params, tol));
        forms.absorb(verifier::verify_root_of_unity_forms(params, tol));
        ratio_pairs.insert((params.d(), params.n()));
        average_cells.insert((params.d(), params.shape().t, params.n()));
    }
    for &(d, n) in &ratio_pairs {
        for m in 0..d {
            ratios.absorb(verifier::verify_ratio_identity(d, n, m, tol));
        }
    }
    for &(d, t, n) in &average_cells {
        averages.absorb(verifier::verify_filter_average(d, t, n, tol));
    }

    let summaries = [
        equivalence,
        reversed,
        binomials,
        unity_sums,
        roots,
        initial,
        intermediate,
        forms,
        ratios,
        averages,
    ];

    println!(
        "{:<30} {:<9} {:>7}  {:>13}  {:<18} result",
        "identity", "mode", "checks", "worst resid", "at"
    );
    let mut all_passed = true;
    for summary in &summaries {
        let residual = if summary.worst == 0.0 {
            "0".to_string()
        } else if summary.worst_relative {
            format!("{:.1e} rel", summary.worst)
        } else {
            format!("{:.1e}", summary.worst)
        };
        println!(
            "{:<30} {:<9} {:>7}  {:>13}  {:<18} {}",
            summary.identity,
            summary.mode,
            summary.checks,
            residual,
            summary.worst_at,
            if summary.passed() { "pass" } else { "FAIL" }
        );
        all_passed &= summary.passed();
    }

    let passed_count = summaries.iter().filter(|s| s.passed()).count();
    println!(
        "verify: {passed_count}/{} identities passed (grid {}, {} valid triples, {skipped} skipped, tolerance {:e})",
        summaries.len(),
        args.grid,
        triples.len(),
        tol,
    );

    if all_passed {
        Ok(ExitCode::SUCCESS)
    } else {
        for summary in &summaries {
            if !summary.passed() {
                eprintln!(
                    "error: {} failed {} of {} checks, worst residual {:e} (tolerance {:e}) at {}",
                    summary.identity,
                    summary.failures,
                    summary.checks,
                    summary.worst,
                    summary.tolerance,
                    summary.worst_at
                );
            }
        }
        Ok(ExitCode::FAILURE)
    }
}
