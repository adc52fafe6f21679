//! Validated problem parameters and the shape quantities derived from them.

use thiserror::Error;

/// Rejection reasons for inadmissible `(N, K, D)` triples.
///
/// The admissible region is `K > D > 1` and `N > 1`. Inputs outside it are
/// rejected at construction, never clamped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParamError {
    /// The construction needs at least two servers.
    #[error("requires N > 1 (got N = {0})")]
    TooFewServers(u64),
    /// Single-message retrieval (D = 1) is a different regime.
    #[error("requires D > 1 (got D = {0})")]
    TooFewDemands(u64),
    /// Retrieving all messages (D = K) or more is a different regime.
    #[error("requires K > D (got K = {0}, D = {1})")]
    TooFewMessages(u64, u64),
}

/// A validated triple: `N` servers, `K` stored messages, `D` demand messages.
///
/// Construction enforces `K > D > 1` and `N > 1`; every downstream
/// operation in this crate assumes those invariants hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Parameters {
    n: u64,
    k: u64,
    d: u64,
}

/// Quantities derived from a [`Parameters`] triple:
/// `T = K − D + 1` and `S = ⌊T(D−1)/D⌋`.
///
/// `T` is the exponent of the window polynomial `(1 + x + ⋯ + x^{D−1})^T`
/// and the degree of the closed-form polynomial in `N`; `S + 1` is the
/// number of its coefficients (the ones whose index is divisible by `D`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DerivedShape {
    /// `T = K − D + 1`; always at least 2 for valid parameters.
    pub t: u64,
    /// `S = ⌊T(D−1)/D⌋`; always strictly less than `T`.
    pub s: u64,
}

impl Parameters {
    /// Validates and constructs a parameter triple.
    pub fn new(n: u64, k: u64, d: u64) -> Result<Self, ParamError> {
        if n <= 1 {
            return Err(ParamError::TooFewServers(n));
        }
        if d <= 1 {
            return Err(ParamError::TooFewDemands(d));
        }
        if k <= d {
            return Err(ParamError::TooFewMessages(k, d));
        }
        Ok(Self { n, k, d })
    }

    /// Number of servers.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Total number of stored messages.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// Number of demand messages.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// Computes `T = K − D + 1` and `S = ⌊T(D−1)/D⌋`.
    pub fn shape(&self) -> DerivedShape {
        let t = self.k - self.d + 1;
        // t(d−1)/d < t ≤ u64::MAX, so the floor fits back into u64.
        let s = ((t as u128 * (self.d - 1) as u128) / self.d as u128) as u64;
        DerivedShape { t, s }
    }
}

impl std::fmt::Display for Parameters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "N={} K={} D={}", self.n, self.k, self.d)
    }
}
