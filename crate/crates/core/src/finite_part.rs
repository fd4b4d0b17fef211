//! Hadamard finite parts.
//!
//! Closed forms cover `F.p.∫_0^b t^α dt` and `F.p.∫_0^b t^α ln t dt` for every
//! real `α`; [`extract_finite_part`] recovers the constant term of an
//! arbitrary `g(ε)` against the standard family `ε^{−a}(ln 1/ε)^b`.

use nalgebra::{DMatrix, DVector};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FinitePartError {
    #[error("upper bound must be positive, got {0}")]
    NonPositiveBound(f64),
    #[error("basis pair ({a}, {b}) appears more than once")]
    DuplicateBasis { a: f64, b: u32 },
    #[error("basis pair (0, 0) is the finite part itself and cannot be a divergent term")]
    ConstantInBasis,
    #[error("basis exponent a must be finite and non-negative, got {0}")]
    InvalidExponent(f64),
    #[error("epsilon grid values must lie in (0, 1), got {0}")]
    EpsilonOutOfRange(f64),
    #[error("epsilon grid must be strictly decreasing")]
    GridNotDecreasing,
    #[error("epsilon grid must span at least 3 decades, spans {0:.2}")]
    GridTooNarrow(f64),
    #[error("epsilon grid needs at least {needed} points for this basis, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("g(ε) is not finite at ε = {0}")]
    NonFiniteSample(f64),
    #[error("fit is ill-conditioned (condition estimate {condition:e}); change the basis or the grid")]
    IllConditioned { condition: f64 },
}

/// Condition estimate above which [`extract_finite_part`] refuses to answer.
pub const MAX_CONDITION: f64 = 1e12;

/// `F.p.∫_0^b t^α dt`: `b^{α+1}/(α+1)`, or `ln b` at `α = −1`.
pub fn fp_power_integral(alpha: f64, b: f64) -> Result<f64, FinitePartError> {
    check_bound(b)?;
    let beta = alpha + 1.0;
    if beta == 0.0 {
        Ok(b.ln())
    } else {
        Ok(b.powf(beta) / beta)
    }
}

/// Exact [`fp_power_integral`], available when `α ≠ −1` and `b^{α+1}` is
/// rational: `α` an integer, or `b = 1`.
pub fn fp_power_integral_exact(alpha: &Rational, b: &Rational) -> Option<Rational> {
    let beta = alpha + Rational::one();
    if beta.is_zero() || !b.is_positive() {
        return None;
    }
    let power = rational_power(b, &beta)?;
    Some(power / beta)
}

/// `F.p.∫_0^b t^α ln t dt`:
/// `b^{α+1}(ln b/(α+1) − 1/(α+1)²)`, or `(ln b)²/2` at `α = −1`.
pub fn fp_log_power_integral(alpha: f64, b: f64) -> Result<f64, FinitePartError> {
    check_bound(b)?;
    let beta = alpha + 1.0;
    let l = b.ln();
    if beta == 0.0 {
        Ok(l * l / 2.0)
    } else {
        Ok(b.powf(beta) * (l / beta - 1.0 / (beta * beta)))
    }
}

/// Exact [`fp_log_power_integral`] at `b = 1`, where it reduces to
/// `−1/(α+1)²` (and `0` at `α = −1`).
pub fn fp_log_power_integral_exact(alpha: &Rational) -> Rational {
    let beta = alpha + Rational::one();
    if beta.is_zero() {
        Rational::zero()
    } else {
        -(&beta * &beta).recip()
    }
}

fn check_bound(b: f64) -> Result<(), FinitePartError> {
    if b > 0.0 {
        Ok(())
    } else {
        Err(FinitePartError::NonPositiveBound(b))
    }
}

fn rational_power(b: &Rational, e: &Rational) -> Option<Rational> {
    if b.is_one() {
        return Some(Rational::one());
    }
    if !e.is_integer() {
        return None;
    }
    let n = e.to_integer().to_i32()?;
    Some(num_traits::pow::Pow::pow(b, n))
}

/// One divergent term `coeff·ε^{−a}(ln 1/ε)^b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DivergentTerm {
    pub a: f64,
    pub b: u32,
    pub coeff: f64,
}

/// `g(ε) ≈ Σ coeff·ε^{−a}(ln 1/ε)^b + finite_part` on the fit grid.
#[derive(Clone, Debug, PartialEq)]
pub struct FinitePartDecomposition {
    pub divergent_terms: Vec<DivergentTerm>,
    pub finite_part: f64,
    /// Largest absolute residual of the fit over the grid.
    pub residual: f64,
    /// Condition estimate of the normalized, weighted design matrix.
    pub condition: f64,
}

fn basis_value(a: f64, b: u32, eps: f64) -> f64 {
    eps.powf(-a) * (-eps.ln()).powi(b as i32)
}

/// `count` log-spaced values from `start` down to `end` (`start > end`).
pub fn eps_grid(start: f64, end: f64, count: usize) -> Vec<f64> {
    let step = (end / start).ln() / (count.max(2) - 1) as f64;
    (0..count).map(|i| start * (step * i as f64).exp()).collect()
}

/// Least-squares separation of `g` into the divergent `basis` terms and a
/// constant.
///
/// Columns are scaled to unit norm, and each row is weighted by
/// `1/(1 + Σ|basis|)` so the large-ε rows, where rounding in `g` is
/// smallest, carry the constant.
pub fn extract_finite_part(
    g: impl Fn(f64) -> f64,
    basis: &[(f64, u32)],
    eps_grid: &[f64],
) -> Result<FinitePartDecomposition, FinitePartError> {
    for (i, &(a, b)) in basis.iter().enumerate() {
        if !(a >= 0.0 && a.is_finite()) {
            return Err(FinitePartError::InvalidExponent(a));
        }
        if a == 0.0 && b == 0 {
            return Err(FinitePartError::ConstantInBasis);
        }
        if basis[..i].iter().any(|&(a2, b2)| a2 == a && b2 == b) {
            return Err(FinitePartError::DuplicateBasis { a, b });
        }
    }
    let needed = 2 * (basis.len() + 1);
    if eps_grid.len() < needed {
        return Err(FinitePartError::TooFewPoints {
            needed,
            got: eps_grid.len(),
        });
    }
    if let Some(&e) = eps_grid.iter().find(|&&e| !(e > 0.0 && e < 1.0)) {
        return Err(FinitePartError::EpsilonOutOfRange(e));
    }
    if !eps_grid.windows(2).all(|w| w[1] < w[0]) {
        return Err(FinitePartError::GridNotDecreasing);
    }
    let decades = (eps_grid[0] / eps_grid[eps_grid.len() - 1]).log10();
    if decades < 3.0 {
        return Err(FinitePartError::GridTooNarrow(decades));
    }

    let rows = eps_grid.len();
    let cols = basis.len() + 1;
    let mut design = DMatrix::<f64>::zeros(rows, cols);
    let mut rhs = DVector::<f64>::zeros(rows);
    for (r, &eps) in eps_grid.iter().enumerate() {
        let y = g(eps);
        if !y.is_finite() {
            return Err(FinitePartError::NonFiniteSample(eps));
        }
        let mut mass = 0.0;
        for (c, &(a, b)) in basis.iter().enumerate() {
            let v = basis_value(a, b, eps);
            design[(r, c)] = v;
            mass += v.abs();
        }
        design[(r, cols - 1)] = 1.0;
        let w = 1.0 / (1.0 + mass);
        for c in 0..cols {
            design[(r, c)] *= w;
        }
        rhs[r] = y * w;
    }
    let norms: Vec<f64> = (0..cols).map(|c| design.column(c).norm()).collect();
    for (c, &n) in norms.iter().enumerate() {
        design.column_mut(c).unscale_mut(n);
    }

    let svd = design.clone().svd(true, true);
    let sv = &svd.singular_values;
    let (smax, smin) = sv
        .iter()
        .fold((0.0f64, f64::INFINITY), |(hi, lo), &s| (hi.max(s), lo.min(s)));
    let condition = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    if !(condition <= MAX_CONDITION) {
        return Err(FinitePartError::IllConditioned { condition });
    }
    let scaled = svd
        .solve(&rhs, smax * f64::EPSILON)
        .map_err(|_| FinitePartError::IllConditioned { condition })?;
    let coeffs: Vec<f64> = (0..cols).map(|c| scaled[c] / norms[c]).collect();

    let residual = eps_grid
        .iter()
        .map(|&eps| {
            let model: f64 = basis
                .iter()
                .zip(&coeffs)
                .map(|(&(a, b), c)| c * basis_value(a, b, eps))
                .sum::<f64>()
                + coeffs[cols - 1];
            (g(eps) - model).abs()
        })
        .fold(0.0, f64::max);

    Ok(FinitePartDecomposition {
        divergent_terms: basis
            .iter()
            .zip(&coeffs)
            .map(|(&(a, b), &coeff)| DivergentTerm { a, b, coeff })
            .collect(),
        finite_part: coeffs[cols - 1],
        residual,
        condition,
    })
}
