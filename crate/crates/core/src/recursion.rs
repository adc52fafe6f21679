//! Exact solver for the backward recursion that defines `L_1, …, L_K`, and
//! the normalized level evaluated from its solution.
//!
//! This path is pure rational arithmetic and serves as the ground-truth
//! oracle for the closed form: the sequence is seeded with
//! `L_K = (N−1)^{K−D}` and `L_{K−D+1} = ⋯ = L_{K−1} = 0`, and each earlier
//! entry is `L_j = (1/(N−1)) Σ_{i=1}^{D} C(D,i) L_{i+j}`, computed for `j`
//! from `K−D` down to 1 so that every right-hand side is already known.

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::binomial::binomial_row;
use crate::params::Parameters;
use crate::Rational;

/// The exact values `L_1, …, L_K` for one parameter triple.
///
/// Entry access is 1-based to match the sequence definition: `value(j)`
/// is `L_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    params: Parameters,
    values: Vec<Rational>,
}

/// Read-only index-reversed view of a [`SequenceTable`]: `M_t = L_{K−t}`
/// for `t ∈ [0 : K−1]`.
///
/// Reversal turns the backward recursion into a forward constant-coefficient
/// recurrence `N·M_t = Σ_{i=0}^{D} C(D,i)·M_{t−i}` with initial segment
/// `M_0 = (N−1)^{K−D}`, `M_1 = ⋯ = M_{D−1} = 0`.
#[derive(Debug, Clone, Copy)]
pub struct ReversedView<'a> {
    table: &'a SequenceTable,
}

/// Solves the recursion exactly; total for every valid parameter triple.
pub fn solve(params: &Parameters) -> SequenceTable {
    let (n, k, d) = (params.n(), params.k(), params.d());
    let mut values = vec![Rational::zero(); k as usize];

    values[(k - 1) as usize] =
        Rational::from_integer(Pow::pow(&BigInt::from(n - 1), k - d));

    let weights = binomial_row(d);
    let n_minus_one = Rational::from_integer(BigInt::from(n - 1));
    for j in (1..=k - d).rev() {
        let mut acc = Rational::zero();
        for i in 1..=d {
            acc += Rational::from_integer(BigInt::from(weights[i as usize].clone()))
                * &values[(i + j - 1) as usize];
        }
        values[(j - 1) as usize] = acc / &n_minus_one;
    }

    SequenceTable { params: *params, values }
}

/// Solves the recursion and evaluates the normalized level
/// `L = (N/D) Σ_{t=1}^{K} C(K,t) L_t − (N/D) Σ_{t=1}^{K−D} C(K−D,t) L_t`.
pub fn normalized_level(params: &Parameters) -> Rational {
    solve(params).normalized_level()
}

impl SequenceTable {
    /// The parameters this table was solved for.
    pub fn params(&self) -> &Parameters {
        &self.params
    }

    /// `L_j` for `j ∈ [1 : K]`. Panics outside that range.
    pub fn value(&self, j: u64) -> &Rational {
        assert!(
            (1..=self.params.k()).contains(&j),
            "sequence index {j} outside [1:{}]",
            self.params.k()
        );
        &self.values[(j - 1) as usize]
    }

    /// All values in index order; slot `j − 1` holds `L_j`.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Evaluates the normalized level from this table.
    pub fn normalized_level(&self) -> Rational {
        let (n, k, d) = (self.params.n(), self.params.k(), self.params.d());
        let row_k = binomial_row(k);
        let row_kd = binomial_row(k - d);

        let mut full = Rational::zero();
        for t in 1..=k {
            full += Rational::from_integer(BigInt::from(row_k[t as usize].clone()))
                * self.value(t);
        }
        let mut partial = Rational::zero();
        for t in 1..=k - d {
            partial += Rational::from_integer(BigInt::from(row_kd[t as usize].clone()))
                * self.value(t);
        }

        Rational::new(BigInt::from(n), BigInt::from(d)) * (full - partial)
    }

    /// The index-reversed view `M_t = L_{K−t}`.
    pub fn reversed(&self) -> ReversedView<'_> {
        ReversedView { table: self }
    }
}

impl<'a> ReversedView<'a> {
    /// The parameters of the underlying table.
    pub fn params(&self) -> &Parameters {
        self.table.params()
    }

    /// `M_t = L_{K−t}` for `t ∈ [0 : K−1]`. Panics outside that range.
    pub fn value(&self, t: u64) -> &Rational {
        let k = self.table.params.k();
        assert!(t < k, "reversed index {t} outside [0:{}]", k - 1);
        self.table.value(k - t)
    }

    /// Number of entries, `K`.
    pub fn len(&self) -> u64 {
        self.table.params.k()
    }

    /// Always false: valid parameters imply `K ≥ 3`.
    pub fn is_empty(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ints(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| rat(v, 1)).collect()
    }

    #[test]
    fn solve_examples() {
        let table = solve(&Parameters::new(2, 3, 2).unwrap());
        assert_eq!(table.values(), ints(&[1, 0, 1]).as_slice());

        let table = solve(&Parameters::new(2, 4, 2).unwrap());
        assert_eq!(table.values(), ints(&[2, 1, 0, 1]).as_slice());

        let table = solve(&Parameters::new(3, 3, 2).unwrap());
        assert_eq!(table.values(), ints(&[1, 0, 2]).as_slice());
    }

    #[test]
    fn normalized_level_examples() {
        assert_eq!(
            normalized_level(&Parameters::new(2, 3, 2).unwrap()),
            rat(3, 1)
        );
        assert_eq!(
            normalized_level(&Parameters::new(2, 4, 3).unwrap()),
            rat(8, 3)
        );
        assert_eq!(
            normalized_level(&Parameters::new(3, 3, 2).unwrap()),
            rat(6, 1)
        );
    }

    #[test]
    fn reversed_view_examples() {
        let cases: [(u64, u64, u64, &[i64]); 3] = [
            (2, 3, 2, &[1, 0, 1]),
            (2, 4, 2, &[1, 0, 1, 2]),
            (3, 3, 2, &[2, 0, 1]),
        ];
        for (n, k, d, expected) in cases {
            let table = solve(&Parameters::new(n, k, d).unwrap());
            let view = table.reversed();
            assert_eq!(view.len(), k);
            for (t, want) in expected.iter().enumerate() {
                assert_eq!(view.value(t as u64), &rat(*want, 1), "M_{t} for N={n} K={k} D={d}");
            }
        }
    }

    #[test]
    fn seed_values_are_exact() {
        let p = Parameters::new(4, 9, 3).unwrap();
        let table = solve(&p);
        assert_eq!(
            table.value(9),
            &Rational::from_integer(BigInt::from(3u32).pow(6u32))
        );
        for j in 7..=8 {
            assert!(table.value(j).is_zero());
        }
    }

    fn small_params() -> impl Strategy<Value = Parameters> {
        (2u64..8, 3u64..16)
            .prop_flat_map(|(n, k)| (Just(n), Just(k), 2..k))
            .prop_map(|(n, k, d)| Parameters::new(n, k, d).unwrap())
    }

    proptest! {
        // Replaying the defining relation over the solved table must give
        // rational equality, not closeness.
        #[test]
        fn forward_replay_is_exact(p in small_params()) {
            let table = solve(&p);
            let weights = binomial_row(p.d());
            let n_minus_one = Rational::from_integer(BigInt::from(p.n() - 1));
            for j in 1..=p.k() - p.d() {
                let mut acc = Rational::zero();
                for i in 1..=p.d() {
                    acc += Rational::from_integer(BigInt::from(weights[i as usize].clone()))
                        * table.value(i + j);
                }
                prop_assert_eq!(&(table.value(j) * &n_minus_one), &acc);
            }
        }

        #[test]
        fn reversed_recursion_holds(p in small_params()) {
            let table = solve(&p);
            let view = table.reversed();
            let weights = binomial_row(p.d());
            let n = Rational::from_integer(BigInt::from(p.n()));
            for t in p.d()..p.k() {
                let mut acc = Rational::zero();
                for i in 0..=p.d() {
                    acc += Rational::from_integer(BigInt::from(weights[i as usize].clone()))
                        * view.value(t - i);
                }
                prop_assert_eq!(&(view.value(t) * &n), &acc);
            }
        }

        #[test]
        fn values_nonnegative_and_level_positive(p in small_params()) {
            let table = solve(&p);
            for value in table.values() {
                prop_assert!(value >= &Rational::zero());
            }
            prop_assert!(table.normalized_level() > Rational::zero());
        }

        #[test]
        fn reversal_is_an_index_flip(p in small_params()) {
            let table = solve(&p);
            let view = table.reversed();
            for t in 0..p.k() {
                prop_assert_eq!(view.value(t), table.value(p.k() - t));
            }
        }
    }

    #[test]
    #[should_panic(expected = "outside")]
    fn zero_index_panics() {
        let table = solve(&Parameters::new(2, 3, 2).unwrap());
        let _ = table.value(0);
    }

    #[test]
    fn two_server_tables_are_integral() {
        // every division is by N−1 = 1, so no denominators appear
        let table = solve(&Parameters::new(2, 9, 4).unwrap());
        for value in table.values() {
            assert!(value.denom().is_one());
        }
    }
}
