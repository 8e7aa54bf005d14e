//! Scalar abstraction for the exact arithmetic core.

use num_traits::Signed;
use std::fmt;

/// Signed scalar with a total order and exact comparisons.
///
/// Every quantity the model branches on (utilities, thresholds, restricted
/// out-degrees) is compared exactly, so `Ord` is required rather than
/// `PartialOrd`; this keeps floating point types out by construction.
/// `num_rational::BigRational`, `num_rational::Rational64`, and the
/// built-in signed integers all qualify.
pub trait Scalar: Signed + Ord + Clone + fmt::Debug + fmt::Display {}

impl<T> Scalar for T where T: Signed + Ord + Clone + fmt::Debug + fmt::Display {}

/// The constant `2`, used to clear denominators in threshold comparisons.
pub fn two<S: Scalar>() -> S {
    S::one() + S::one()
}
