//! Exact rational algebra.
//!
//! Everything here is computed with arbitrary-precision rationals and never
//! rounds: Bernoulli numbers from their binomial recurrence, the
//! Faulhaber–Bernoulli power-sum formula, the period-1 polynomials `P_m` that
//! appear when the zeta staircase is written as `Σ P_m({x}) x^m`, and the
//! closed form `ζ(−n) = −B_{n+1}/(n+1)`.

mod bernoulli;
mod faulhaber;
mod periodic;
mod zeta;

pub use bernoulli::{bernoulli, bernoulli_table, BernoulliTable};
pub use faulhaber::{faulhaber_sum, FaulhaberResult};
pub use periodic::{periodic_mean, pm_polynomial, PeriodicPolynomial};
pub use zeta::zeta_neg_int;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("the Faulhaber–Bernoulli formula needs exponent n >= 1, got n = {0}")]
    ExponentTooSmall(u32),
    #[error("the upper bound of a power sum must be m >= 1, got m = {0}")]
    EmptyUpperBound(u64),
    #[error("P_m is defined for 0 <= m <= n with n >= 1, got n = {n}, m = {m}")]
    IndexOutOfRange { n: u32, m: u32 },
}

/// `C(n, k)` as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub(crate) fn rational_from_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}
