//! Closed-form evaluation of the normalized level,
//! `L = (1/D) Σ_{k=0}^{S} a_{kD} N^{T−k}`, and the integer
//! subpacketization level derived from it.

use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, Zero};

use crate::genfunc::expand_coefficients;
use crate::params::Parameters;
use crate::Rational;

/// Everything the closed form yields for one parameter triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormResult {
    /// The parameters evaluated.
    pub params: Parameters,
    /// The normalized level `L`, in lowest terms.
    pub level: Rational,
    /// The smallest positive integer of the form `m·L` with `m` a positive
    /// integer; with `L = p/q` in lowest terms this is `p`.
    pub subpacketization: BigUint,
    /// The `m` achieving it, namely `q`; always divides `D`.
    pub multiplier: BigUint,
    /// `P(N) = Σ_{k=0}^{S} a_{kD} N^{T−k}`, so that `L = P(N)/D`.
    pub polynomial_value: BigUint,
}

/// `P(N) = Σ_{k=0}^{S} a_{kD} N^{T−k}` in exact integer arithmetic.
pub fn polynomial_value(params: &Parameters) -> BigUint {
    let shape = params.shape();
    let coeffs = expand_coefficients(params.d(), shape.t)
        .expect("valid parameters imply D >= 2 and T >= 2");
    let n = BigUint::from(params.n());

    let mut acc = BigUint::zero();
    for (k, coeff) in coeffs.filtered().into_iter().enumerate() {
        acc += coeff * Pow::pow(&n, shape.t - k as u64);
    }
    acc
}

/// The normalized level `L = P(N)/D` as an exact rational.
pub fn normalized_level(params: &Parameters) -> Rational {
    Rational::new(
        BigInt::from(polynomial_value(params)),
        BigInt::from(params.d()),
    )
}

/// Degree and leading coefficient of `L` as a polynomial in `N`:
/// always `(T, 1/D)` since `a_0 = 1`.
pub fn leading_term(params: &Parameters) -> (u64, Rational) {
    let shape = params.shape();
    (
        shape.t,
        Rational::new(BigInt::from(1), BigInt::from(params.d())),
    )
}

/// Evaluates `L` by the closed form and reduces it to the integer
/// subpacketization level and its multiplier.
pub fn subpacketization_level(params: &Parameters) -> ClosedFormResult {
    let polynomial = polynomial_value(params);
    let level = Rational::new(BigInt::from(polynomial.clone()), BigInt::from(params.d()));
    // `Rational` is kept in lowest terms, so numerator and denominator are
    // exactly the subpacketization level and its multiplier.
    let subpacketization = level
        .numer()
        .to_biguint()
        .expect("level is positive");
    let multiplier = level
        .denom()
        .to_biguint()
        .expect("denominator is positive");

    ClosedFormResult {
        params: *params,
        level,
        subpacketization,
        multiplier,
        polynomial_value: polynomial,
    }
}
