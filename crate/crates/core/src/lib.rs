//! Exact computation of the normalized subpacketization level of a
//! multi-message private information retrieval scheme.
//!
//! For a scheme with `N` servers, `K` stored messages, and `D` demand
//! messages, the normalized subpacketization level `L` is defined through a
//! backward linear recursion over the rationals. This crate evaluates `L`
//! two independent ways — by solving that recursion exactly
//! ([`recursion`]) and by a closed-form polynomial in `N` built from the
//! coefficients of `(1 + x + ⋯ + x^{D−1})^T` ([`closed_form`] and
//! [`genfunc`]) — and derives the integer subpacketization level as the
//! smallest positive integer multiple of `L`.
//!
//! Everything on the computation path is exact: arbitrary-precision
//! integers and rationals, no floating point. The [`verifier`] module
//! additionally machine-checks each intermediate identity connecting the
//! two routes, in exact arithmetic where the identity is rational and in
//! complex double precision (with explicit tolerances) where roots of
//! unity and real `D`-th roots appear.

pub mod binomial;
pub mod closed_form;
pub mod genfunc;
pub mod params;
pub mod recursion;
pub mod verifier;

pub use closed_form::ClosedFormResult;
pub use genfunc::CoefficientVector;
pub use params::{DerivedShape, ParamError, Parameters};
pub use recursion::{ReversedView, SequenceTable};
pub use verifier::{Mode, VerificationReport};

/// Exact rational scalar used for all level computations.
///
/// Values are kept in canonical form: lowest terms, positive denominator.
pub type Rational = num_rational::BigRational;

/// Complex double-precision scalar used by the floating verification paths.
pub type Complex64 = num_complex::Complex64;
