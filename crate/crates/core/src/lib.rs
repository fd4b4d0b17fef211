//! Generalized limits and the special values of the Riemann zeta function.
//!
//! * [`exact`]: Bernoulli numbers, Faulhaber sums, the periodic coefficient
//!   polynomials of a power-sum staircase and `ζ(−n)` as exact rationals.
//! * [`series`]: Cesàro `(C,k)` means of series and the smallest summing order.
//! * [`integral`]: Riesz means of integrals and Cesàro limits of functions.
//! * [`finite_part`]: Hadamard finite parts, closed form and fitted.
//! * [`zeta`]: numeric estimators of `ζ(−α)` and `ζ′(−α)` as Cesàro limits of
//!   staircase functions.
//!
//! ```
//! use zetasum::exact::zeta_neg_int;
//! use zetasum::zeta::zeta_via_cesaro;
//!
//! let exact = zeta_neg_int(1);
//! assert_eq!(exact.to_string(), "-1/12");
//!
//! let est = zeta_via_cesaro(1.0, Some(2), 1e4, 1e-3).unwrap();
//! assert!((est.value + 1.0 / 12.0).abs() < 1e-2);
//! ```

// `!(x >= 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod compensated;
pub mod dd;
pub mod evaluation;
pub mod exact;
pub mod finite_part;
pub mod integral;
pub mod quadrature;
pub mod series;
pub mod zeta;

pub use evaluation::{CesaroEvaluation, Sample};

/// The guide's chapters, compiled as doc-tests so their snippets stay current.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!(concat!("../../../book/src/", $path))]
            mod $name {}
        };
    }
    chapter!(introduction, "introduction.md");
    chapter!(exact, "arbitrary_precision_rational_arithmetic_polynomi/index.md");
    chapter!(bernoulli, "bernoulli_numbers_exact_rational_recurrence_comp/index.md");
    chapter!(faulhaber, "faulhaber_formula_sum_of_powers/index.md");
    chapter!(zeta_values, "riemann_zeta_function_special_values_calculator/index.md");
    chapter!(series, "ces_ro_summation_divergent_series_implementation/index.md");
    chapter!(integrals, "riesz_means_summability_numerical_integration/index.md");
    chapter!(
        finite_parts,
        "hadamard_finite_part_regularized_singular_integr/index.md"
    );
    chapter!(staircase, "euler_maclaurin_summation_numerical_zeta_evaluat/index.md");
    chapter!(arithmetic, "compensated_summation_high_accuracy_prefix_sums/index.md");
    chapter!(diagnostics, "series_acceleration_convergence_diagnostics_comm/index.md");
}
pub use exact::Rational;

use thiserror::Error;

/// Any error raised by this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] exact::ExactError),
    #[error(transparent)]
    Series(#[from] series::SeriesError),
    #[error(transparent)]
    Integral(#[from] integral::IntegralError),
    #[error(transparent)]
    FinitePart(#[from] finite_part::FinitePartError),
    #[error(transparent)]
    Zeta(#[from] zeta::ZetaError),
}
