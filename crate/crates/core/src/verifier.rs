//! Machine checks for every identity behind the closed form.
//!
//! Identities that live in the rationals (the reversed recursion, the
//! binomial sum identities, and the closed-form-vs-oracle equivalence the
//! CLI adds on top) are checked with exact arithmetic and must come out
//! with zero residual. Identities involving the roots of unity
//! `ω_m = e^{i2πm/D}` and the real root `s = N^{1/D}` are evaluated in
//! complex double precision against an explicit tolerance: deviations are
//! measured absolutely for reference magnitudes up to 1 and relatively
//! beyond that, and the scaling used is recorded in the report.

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use std::f64::consts::TAU;

use crate::binomial::binomial_row;
use crate::genfunc::expand_coefficients;
use crate::params::Parameters;
use crate::recursion;
use crate::{Complex64, Rational};

/// Tolerance used by callers that have no reason to pick their own.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Identity label: `N·M_t = Σ_{i=0}^{D} C(D,i)·M_{t−i}` on the oracle table.
pub const REVERSED_RECURSION: &str = "reversed recursion";
/// Identity label: `Σ_m ω_m^P` is `D` when `D | P` and `0` otherwise.
pub const ROOT_OF_UNITY_SUMS: &str = "root-of-unity sums";
/// Identity label: each `r_m = 1/(u_m−1)` solves `(1+r^{−1})^D = N`.
pub const CHARACTERISTIC_ROOTS: &str = "characteristic roots";
/// Identity label: `M_t = Σ_m c_m r_m^t` reproduces the oracle table.
pub const INITIAL_CONDITIONS: &str = "initial conditions";
/// Identity label: the two truncated binomial sum identities.
pub const BINOMIAL_IDENTITIES: &str = "binomial sum identities";
/// Identity label: `L = (N/D) Σ_m c_m (N−1) r_m^D (1+r_m)^{K−D}`.
pub const INTERMEDIATE_FORM: &str = "intermediate level form";
/// Identity label: the two root-of-unity expressions for `L`.
pub const ROOT_OF_UNITY_FORMS: &str = "root-of-unity level forms";
/// Identity label: `(1−N^{−1})/(1−ω_m s^{−1}) = Σ_{t<D} ω_m^t s^{−t}`.
pub const RATIO_IDENTITY: &str = "geometric ratio";
/// Identity label: the filter average equals `Σ_k a_{kD} N^{−k}`.
pub const FILTER_AVERAGE: &str = "filtered-coefficient average";

/// Arithmetic regime a report was produced under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Rational/integer arithmetic; passing means residual exactly zero.
    Exact,
    /// Complex double precision; passing means residual within tolerance.
    Floating,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Exact => write!(f, "exact"),
            Mode::Floating => write!(f, "floating"),
        }
    }
}

/// Outcome of checking one identity on one instance.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    /// Which identity was checked (one of the label constants).
    pub identity: &'static str,
    /// The instance it was checked on, e.g. `N=2 K=4 D=3` or `D=4 P=6`.
    pub instance: String,
    /// Arithmetic regime.
    pub mode: Mode,
    /// Worst deviation observed; scaled by the reference magnitude where
    /// that magnitude exceeds 1. Always finite.
    pub residual: f64,
    /// Whether the worst deviation was scaled (relative) or raw (absolute).
    pub relative: bool,
    /// Threshold the residual was compared against; 0 in exact mode.
    pub tolerance: f64,
    /// `residual <= tolerance`.
    pub passed: bool,
}

impl VerificationReport {
    fn new(
        identity: &'static str,
        instance: String,
        mode: Mode,
        worst: Worst,
        tolerance: f64,
    ) -> Self {
        VerificationReport {
            identity,
            instance,
            mode,
            residual: worst.residual,
            relative: worst.relative,
            tolerance,
            passed: worst.residual <= tolerance,
        }
    }
}

/// Running worst-case deviation over the comparisons inside one check.
#[derive(Debug, Clone, Copy, Default)]
struct Worst {
    residual: f64,
    relative: bool,
}

impl Worst {
    /// Record `|deviation|` scaled by `max(1, |reference|)`. Non-finite
    /// deviations are clamped to `f64::MAX` so reports stay finite.
    fn absorb(&mut self, deviation: f64, reference: f64) {
        let scale = reference.abs().max(1.0);
        let mut scaled = deviation.abs() / scale;
        if !scaled.is_finite() {
            scaled = f64::MAX;
        }
        if scaled > self.residual {
            self.residual = scaled;
            self.relative = scale > 1.0;
        }
    }

    /// Record an exact-mode deviation: zero stays zero, anything else maps
    /// to a positive finite value even when it rounds below the smallest
    /// normal float.
    fn absorb_exact(&mut self, deviation: &Rational) {
        if deviation.is_zero() {
            return;
        }
        let approx = deviation
            .abs()
            .to_f64()
            .unwrap_or(f64::MAX)
            .clamp(f64::MIN_POSITIVE, f64::MAX);
        if approx > self.residual {
            self.residual = approx;
        }
    }
}

/// `ω_m = e^{i2πm/D}`.
fn omega(d: u64, m: u64) -> Complex64 {
    Complex64::from_polar(1.0, TAU * m as f64 / d as f64)
}

/// The positive real root `s` with `s^D = N`.
fn real_root(n: u64, d: u64) -> f64 {
    (n as f64).powf(1.0 / d as f64)
}

/// `u_m = ω_m s`.
fn scaled_root(n: u64, d: u64, m: u64) -> Complex64 {
    omega(d, m) * real_root(n, d)
}

/// `r_m = 1/(u_m − 1)`.
fn characteristic_root(n: u64, d: u64, m: u64) -> Complex64 {
    (scaled_root(n, d, m) - 1.0).finv()
}

/// `c_m = ((N−1)^{K−D}/D) · (u_m−1)^{D−1} / u_m^{D−1}`.
fn series_coefficient(params: &Parameters, m: u64) -> Complex64 {
    let (n, k, d) = (params.n(), params.k(), params.d());
    let u = scaled_root(n, d, m);
    let lead = ((n - 1) as f64).powi((k - d) as i32) / d as f64;
    ((u - 1.0) / u).powi((d - 1) as i32) * lead
}

fn level_as_f64(params: &Parameters) -> f64 {
    recursion::normalized_level(params)
        .to_f64()
        .unwrap_or(f64::INFINITY)
}

/// Exact check of the reversed recursion on the oracle table:
/// `N·M_t = Σ_{i=0}^{D} C(D,i)·M_{t−i}` for every `t ∈ [D : K−1]`.
pub fn verify_reversed_recursion(params: &Parameters) -> VerificationReport {
    let (n, k, d) = (params.n(), params.k(), params.d());
    let table = recursion::solve(params);
    let view = table.reversed();
    let weights = binomial_row(d);
    let n_rat = Rational::from_integer(BigInt::from(n));

    let mut worst = Worst::default();
    for t in d..k {
        let mut rhs = Rational::zero();
        for i in 0..=d {
            rhs += Rational::from_integer(BigInt::from(weights[i as usize].clone()))
                * view.value(t - i);
        }
        worst.absorb_exact(&(view.value(t) * &n_rat - rhs));
    }
    VerificationReport::new(
        REVERSED_RECURSION,
        params.to_string(),
        Mode::Exact,
        worst,
        0.0,
    )
}

/// Floating check that `Σ_{m=0}^{D−1} ω_m^P` is `D` when `D | P` and `0`
/// otherwise. The deviation is measured absolutely.
pub fn verify_root_of_unity_sum(d: u64, exponent: i64, tolerance: f64) -> VerificationReport {
    assert!(d >= 2, "requires D >= 2");
    let exponent_i32 = i32::try_from(exponent).expect("exponent fits i32");
    let sum: Complex64 = (0..d).map(|m| omega(d, m).powi(exponent_i32)).sum();
    let target = if exponent.rem_euclid(d as i64) == 0 {
        d as f64
    } else {
        0.0
    };

    let mut worst = Worst::default();
    worst.absorb((sum - target).norm(), 0.0);
    VerificationReport::new(
        ROOT_OF_UNITY_SUMS,
        format!("D={d} P={exponent}"),
        Mode::Floating,
        worst,
        tolerance,
    )
}

/// Floating check that every `r_m = 1/(u_m−1)` satisfies `(1+r^{−1})^D = N`.
pub fn verify_characteristic_roots(params: &Parameters, tolerance: f64) -> VerificationReport {
    let (n, d) = (params.n(), params.d());
    let mut worst = Worst::default();
    for m in 0..d {
        let r = characteristic_root(n, d, m);
        let lhs = (r.finv() + 1.0).powi(d as i32);
        worst.absorb((lhs - n as f64).norm(), n as f64);
    }
    VerificationReport::new(
        CHARACTERISTIC_ROOTS,
        params.to_string(),
        Mode::Floating,
        worst,
        tolerance,
    )
}

/// Floating check that `M_t = Σ_m c_m r_m^t` reproduces the whole reversed
/// oracle table — the seed values `(N−1)^{K−D}, 0, …, 0` and every later
/// entry, validating the general-solution form end to end.
///
/// The zero entries are cancellations of summands as large as
/// `(N−1)^{K−D}`, so each deviation is measured against the largest
/// summand magnitude at that index rather than against the (possibly
/// zero) target value.
pub fn verify_initial_conditions(params: &Parameters, tolerance: f64) -> VerificationReport {
    let (n, k, d) = (params.n(), params.k(), params.d());
    let table = recursion::solve(params);
    let view = table.reversed();

    let coefficients: Vec<Complex64> = (0..d).map(|m| series_coefficient(params, m)).collect();
    let roots: Vec<Complex64> = (0..d).map(|m| characteristic_root(n, d, m)).collect();

    let mut worst = Worst::default();
    for t in 0..k {
        let mut reconstructed = Complex64::zero();
        let mut largest_term = 0.0f64;
        for m in 0..d as usize {
            let term = coefficients[m] * roots[m].powi(t as i32);
            largest_term = largest_term.max(term.norm());
            reconstructed += term;
        }
        let expected = view.value(t).to_f64().unwrap_or(f64::INFINITY);
        worst.absorb(
            (reconstructed - expected).norm(),
            expected.abs().max(largest_term),
        );
    }
    VerificationReport::new(
        INITIAL_CONDITIONS,
        params.to_string(),
        Mode::Floating,
        worst,
        tolerance,
    )
}

/// Exact check, at an arbitrary rational point `r`, of the truncated
/// binomial sums:
/// `Σ_{t=0}^{K−1} C(K,t) r^t = (1+r)^K − r^K` and
/// `Σ_{t=D}^{K−1} C(K−D,t−D) r^t = r^D ((1+r)^{K−D} − r^{K−D})`.
pub fn verify_binomial_identities(r: &Rational, k: u64, d: u64) -> VerificationReport {
    assert!(k > d && d > 1, "requires K > D > 1");
    let row_k = binomial_row(k);
    let row_kd = binomial_row(k - d);

    let mut powers = Vec::with_capacity(k as usize + 1);
    powers.push(Rational::one());
    for _ in 0..k {
        powers.push(powers.last().unwrap() * r);
    }
    let one_plus = Rational::one() + r;

    let mut lhs_full = Rational::zero();
    for t in 0..k {
        lhs_full += Rational::from_integer(BigInt::from(row_k[t as usize].clone()))
            * &powers[t as usize];
    }
    let rhs_full = num_traits::pow(one_plus.clone(), k as usize) - &powers[k as usize];

    let mut lhs_shifted = Rational::zero();
    for t in d..k {
        lhs_shifted += Rational::from_integer(BigInt::from(row_kd[(t - d) as usize].clone()))
            * &powers[t as usize];
    }
    let rhs_shifted = &powers[d as usize]
        * (num_traits::pow(one_plus, (k - d) as usize) - &powers[(k - d) as usize]);

    let mut worst = Worst::default();
    worst.absorb_exact(&(lhs_full - rhs_full));
    worst.absorb_exact(&(lhs_shifted - rhs_shifted));
    VerificationReport::new(
        BINOMIAL_IDENTITIES,
        format!("r={r} K={k} D={d}"),
        Mode::Exact,
        worst,
        0.0,
    )
}

/// Floating check of the intermediate closed form
/// `L = (N/D) Σ_m c_m (N−1) r_m^D (1+r_m)^{K−D}` against the exact oracle
/// level. Real and imaginary deviations are folded into one distance.
pub fn verify_intermediate_level(params: &Parameters, tolerance: f64) -> VerificationReport {
    let (n, k, d) = (params.n(), params.k(), params.d());
    let level = level_as_f64(params);

    let sum: Complex64 = (0..d)
        .map(|m| {
            let r = characteristic_root(n, d, m);
            series_coefficient(params, m)
                * ((n - 1) as f64)
                * r.powi(d as i32)
                * (r + 1.0).powi((k - d) as i32)
        })
        .sum();
    let value = sum * (n as f64 / d as f64);

    let mut worst = Worst::default();
    worst.absorb((value - level).norm(), level);
    VerificationReport::new(
        INTERMEDIATE_FORM,
        params.to_string(),
        Mode::Floating,
        worst,
        tolerance,
    )
}

/// Floating check of both root-of-unity expressions for the level:
/// `(N(N−1)^T/D²) Σ_m u_m^{T−D}/(u_m−1)^T` and
/// `((N−1)^T/D²) Σ_m (1−ω_m s^{−1})^{−T}`, each against the exact oracle.
pub fn verify_root_of_unity_forms(params: &Parameters, tolerance: f64) -> VerificationReport {
    let (n, d) = (params.n(), params.d());
    let t = params.shape().t;
    let level = level_as_f64(params);
    let s = real_root(n, d);
    let d_sq = (d * d) as f64;
    let growth = ((n - 1) as f64).powi(t as i32);

    let mut sum_scaled = Complex64::zero();
    let mut sum_filtered = Complex64::zero();
    for m in 0..d {
        let u = scaled_root(n, d, m);
        sum_scaled += u.powi(t as i32 - d as i32) * (u - 1.0).powi(-(t as i32));
        sum_filtered += (-omega(d, m) / s + 1.0).powi(-(t as i32));
    }
    let scaled_form = sum_scaled * (n as f64 * growth / d_sq);
    let filtered_form = sum_filtered * (growth / d_sq);

    let mut worst = Worst::default();
    worst.absorb((scaled_form - level).norm(), level);
    worst.absorb((filtered_form - level).norm(), level);
    VerificationReport::new(
        ROOT_OF_UNITY_FORMS,
        params.to_string(),
        Mode::Floating,
        worst,
        tolerance,
    )
}

/// Floating check of the geometric-series ratio
/// `(1−N^{−1})/(1−ω_m s^{−1}) = Σ_{t=0}^{D−1} ω_m^t s^{−t}`.
pub fn verify_ratio_identity(d: u64, n: u64, m: u64, tolerance: f64) -> VerificationReport {
    assert!(d >= 2 && n >= 2 && m < d, "requires D >= 2, N >= 2, m in [0:D-1]");
    let ratio = omega(d, m) / real_root(n, d);
    let lhs = (1.0 - 1.0 / n as f64) / (-ratio + 1.0);

    let mut rhs = Complex64::zero();
    let mut term = Complex64::one();
    for _ in 0..d {
        rhs += term;
        term *= ratio;
    }

    let mut worst = Worst::default();
    worst.absorb((lhs - rhs).norm(), rhs.norm());
    VerificationReport::new(
        RATIO_IDENTITY,
        format!("D={d} N={n} m={m}"),
        Mode::Floating,
        worst,
        tolerance,
    )
}

/// Floating check that averaging the `T`-th power of the ratio identity
/// over `m` filters out exactly the coefficients with index divisible by
/// `D`: `(1/D) Σ_m (1−N^{−1})^T (1−ω_m s^{−1})^{−T} = Σ_{k=0}^{S} a_{kD} N^{−k}`.
/// The right side is computed exactly and converted to floating point once.
pub fn verify_filter_average(d: u64, t: u64, n: u64, tolerance: f64) -> VerificationReport {
    assert!(d >= 2 && t >= 1 && n >= 2, "requires D >= 2, T >= 1, N >= 2");
    let s = real_root(n, d);
    let numerator = (1.0 - 1.0 / n as f64).powi(t as i32);
    let average: Complex64 = (0..d)
        .map(|m| (-omega(d, m) / s + 1.0).powi(-(t as i32)) * numerator)
        .sum::<Complex64>()
        / d as f64;

    let coeffs = expand_coefficients(d, t).expect("validated above");
    let mut exact = Rational::zero();
    for (k, coeff) in coeffs.filtered().into_iter().enumerate() {
        exact += Rational::new(
            BigInt::from(coeff),
            BigInt::from(Pow::pow(&num_bigint::BigUint::from(n), k as u64)),
        );
    }
    let expected = exact.to_f64().unwrap_or(f64::INFINITY);

    let mut worst = Worst::default();
    worst.absorb((average - expected).norm(), expected);
    VerificationReport::new(
        FILTER_AVERAGE,
        format!("D={d} T={t} N={n}"),
        Mode::Floating,
        worst,
        tolerance,
    )
}
