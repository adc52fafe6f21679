//! Exact binomial coefficients over arbitrary-precision integers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(n, k)` by the multiplicative rule; every intermediate division is exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc == C(n, i) here, so acc·(n−i) is divisible by i+1.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The full row `C(n, 0), C(n, 1), …, C(n, n)`.
pub fn binomial_row(n: u64) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n as usize + 1);
    row.push(BigUint::one());
    for k in 0..n {
        let next = row.last().unwrap() * (n - k) / (k + 1);
        row.push(next);
    }
    row
}
