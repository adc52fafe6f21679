//! Coefficients of the window-polynomial power `(1 + x + ⋯ + x^{D−1})^T`.
//!
//! Coefficient `a_n` counts the `T`-tuples over `[0 : D−1]` that sum to
//! `n`; the closed form only ever reads the entries whose index is a
//! multiple of `D`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

/// Default cap on brute-force enumeration, in tuples.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1_000_000;

/// Rejection reasons for the expansion and enumeration operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenfuncError {
    /// The window polynomial needs at least the terms `1 + x`.
    #[error("requires D >= 2 (got D = {0})")]
    WindowTooShort(u64),
    /// A zeroth power has no coefficient structure worth exposing.
    #[error("requires T >= 1 (got T = {0})")]
    PowerTooSmall(u64),
    /// Coefficient indices live in `[0 : T(D−1)]`.
    #[error("coefficient index {index} out of range [0:{max}]")]
    IndexOutOfRange { index: u64, max: u64 },
    /// Enumerating `D^T` tuples would exceed the configured budget.
    #[error("enumerating {tuples} tuples exceeds budget {budget}")]
    BudgetExceeded { tuples: u128, budget: u64 },
}

/// The exact coefficients `a_0, …, a_{T(D−1)}` of `(1 + x + ⋯ + x^{D−1})^T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientVector {
    d: u64,
    t: u64,
    coeffs: Vec<BigUint>,
}

/// Expands `(1 + x + ⋯ + x^{D−1})^T` by `T − 1` successive schoolbook
/// convolutions with the all-ones window of length `D`.
pub fn expand_coefficients(d: u64, t: u64) -> Result<CoefficientVector, GenfuncError> {
    if d < 2 {
        return Err(GenfuncError::WindowTooShort(d));
    }
    if t < 1 {
        return Err(GenfuncError::PowerTooSmall(t));
    }

    let window = d as usize;
    let mut coeffs = vec![BigUint::one(); window];
    for _ in 1..t {
        coeffs = convolve_with_window(&coeffs, window);
    }

    Ok(CoefficientVector { d, t, coeffs })
}

fn convolve_with_window(a: &[BigUint], window: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + window - 1];
    for (i, coeff) in a.iter().enumerate() {
        for slot in &mut out[i..i + window] {
            *slot += coeff;
        }
    }
    out
}

/// Counts, by brute-force enumeration, the `T`-tuples `(n_1, …, n_T)` over
/// `[0 : D−1]` with `Σ n_l = n`. Independent of [`expand_coefficients`];
/// intended for small instances (uses [`DEFAULT_ENUMERATION_BUDGET`]).
pub fn coefficient_count_oracle(d: u64, t: u64, n: u64) -> Result<u64, GenfuncError> {
    coefficient_count_oracle_with_budget(d, t, n, DEFAULT_ENUMERATION_BUDGET)
}

/// [`coefficient_count_oracle`] with an explicit tuple budget.
pub fn coefficient_count_oracle_with_budget(
    d: u64,
    t: u64,
    n: u64,
    budget: u64,
) -> Result<u64, GenfuncError> {
    if d < 2 {
        return Err(GenfuncError::WindowTooShort(d));
    }
    if t < 1 {
        return Err(GenfuncError::PowerTooSmall(t));
    }
    let max = t * (d - 1);
    if n > max {
        return Err(GenfuncError::IndexOutOfRange { index: n, max });
    }
    let tuples = (d as u128).pow(t as u32);
    if tuples > budget as u128 {
        return Err(GenfuncError::BudgetExceeded { tuples, budget });
    }

    // Odometer over [0:D−1]^T with a running digit sum.
    let mut tuple = vec![0u64; t as usize];
    let mut sum = 0u64;
    let mut count = 0u64;
    loop {
        if sum == n {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == tuple.len() {
                return Ok(count);
            }
            if tuple[pos] + 1 < d {
                tuple[pos] += 1;
                sum += 1;
                break;
            }
            sum -= tuple[pos];
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

impl CoefficientVector {
    /// Window length `D`.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// Exponent `T`.
    pub fn t(&self) -> u64 {
        self.t
    }

    /// Degree of the expanded polynomial, `T(D−1)`.
    pub fn degree(&self) -> u64 {
        self.t * (self.d - 1)
    }

    /// All coefficients in index order.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// `a_n`. Panics outside `[0 : T(D−1)]`.
    pub fn coefficient(&self, n: u64) -> &BigUint {
        &self.coeffs[n as usize]
    }

    /// The coefficients at indices divisible by `D`:
    /// `a_0, a_D, …, a_{SD}` with `S = ⌊T(D−1)/D⌋`.
    ///
    /// This realizes the root-of-unity filter as pure index selection.
    pub fn filtered(&self) -> Vec<BigUint> {
        self.coeffs.iter().step_by(self.d as usize).cloned().collect()
    }

    /// Sum of all coefficients; equals `D^T`.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }
}
