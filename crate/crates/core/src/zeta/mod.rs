//! Cesàro-limit estimators for `ζ(−α)` and `ζ′(−α)`.
//!
//! `ζ(−α)` is the Cesàro limit of the staircase
//! `Σ_{n≤x} n^α − F.p.∫_0^x t^α dt`, and `−ζ′(−α)` that of the log-weighted
//! staircase. Primitives are iterated exactly, one unit interval at a time,
//! and the limit `k!·F_k(n)/n^k` is sampled at integer boundaries.

mod primitives;
mod staircase;

pub use primitives::{advance_primitives, PrimitiveState};
pub use staircase::{staircase_value, StaircaseSpec, POLE_GUARD};

use thiserror::Error;

use crate::dd::DoubleDouble;
use crate::evaluation::{CesaroEvaluation, Sample};
use crate::exact::PeriodicPolynomial;
use crate::integral::{primitive_limit, IntegralError, IntegrandSpec};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ZetaError {
    #[error("alpha = {alpha} is within {POLE_GUARD:e} of the pole at -1")]
    NearPole { alpha: f64 },
    #[error("staircase argument must be positive and finite, got {0}")]
    NonPositiveArgument(f64),
    #[error("x_max must be at least {min}, got {got}")]
    UpperLimitTooSmall { min: f64, got: f64 },
    #[error("order k = {k} needs the antiderivative of t^-1 for alpha = {alpha}; use a smaller k")]
    UnsupportedOrder { alpha: f64, k: u32 },
    #[error(transparent)]
    Integral(#[from] IntegralError),
}

/// Number of boundaries the limit is sampled at.
pub const SAMPLE_COUNT: usize = 24;
/// First sampled boundary.
pub const FIRST_SAMPLE: u64 = 10;
/// Smallest accepted `x_max` for the staircase estimators.
pub const MIN_XMAX: f64 = 20.0;
/// Tolerance of [`lemma_witness`].
pub const LEMMA_TOL: f64 = 1e-6;

/// `max(0, ⌈α⌉ + 1)`.
pub fn default_order(alpha: f64) -> u32 {
    let k = alpha.ceil() + 1.0;
    if k > 0.0 {
        k as u32
    } else {
        0
    }
}

/// Geometrically spaced integers from [`FIRST_SAMPLE`] to `last`, deduplicated.
pub fn sample_boundaries(last: u64) -> Vec<u64> {
    let first = FIRST_SAMPLE.min(last);
    let ratio = (last as f64 / first as f64).ln() / (SAMPLE_COUNT - 1) as f64;
    let mut out: Vec<u64> = (0..SAMPLE_COUNT)
        .map(|i| ((first as f64) * (ratio * i as f64).exp()).round() as u64)
        .collect();
    out.push(last);
    out.retain(|&n| n <= last);
    out.dedup();
    out
}

fn tail_len(samples: usize) -> usize {
    4.max(samples / 4)
}

/// Cesàro evaluation of the staircase `s` at order `k` up to `⌊x_max⌋`.
pub fn staircase_limit(s: &StaircaseSpec, k: u32, x_max: f64, tol: f64) -> Result<CesaroEvaluation, ZetaError> {
    if !(x_max >= MIN_XMAX && x_max.is_finite()) {
        return Err(ZetaError::UpperLimitTooSmall {
            min: MIN_XMAX,
            got: x_max,
        });
    }
    let last = x_max.floor() as u64;
    let boundaries = sample_boundaries(last);
    let samples = if k == 0 {
        order_zero_samples(s, &boundaries)
    } else {
        let mut state = PrimitiveState::initial(*s, k)?;
        let mut out = Vec::with_capacity(boundaries.len());
        for &b in &boundaries {
            while state.boundary() < b {
                state.advance();
            }
            out.push(Sample {
                at: b as f64,
                value: state.normalized(),
            });
        }
        out
    };
    Ok(CesaroEvaluation::from_tail(
        f64::from(k),
        last,
        &samples,
        tail_len(samples.len()),
        tol,
    ))
}

/// At `k = 0` only `S_n − H_0(n)` at the sampled boundaries is needed, so
/// the partial sum runs on plain `f64` summands with a double-double
/// accumulator.
fn order_zero_samples(s: &StaircaseSpec, boundaries: &[u64]) -> Vec<Sample> {
    let alpha = s.alpha();
    let log = s.log_weight();
    if alpha.fract() == 0.0 && alpha.abs() < 1e9 {
        let p = alpha as i32;
        if log {
            sweep(s, boundaries, |m| m.powi(p) * m.ln())
        } else {
            sweep(s, boundaries, |m| m.powi(p))
        }
    } else if (2.0 * alpha).fract() == 0.0 && alpha.abs() < 1e9 {
        let p = alpha.floor() as i32;
        if log {
            sweep(s, boundaries, |m| m.sqrt() * m.powi(p) * m.ln())
        } else {
            sweep(s, boundaries, |m| m.sqrt() * m.powi(p))
        }
    } else if log {
        sweep(s, boundaries, |m| m.powf(alpha) * m.ln())
    } else {
        sweep(s, boundaries, |m| m.powf(alpha))
    }
}

fn sweep(s: &StaircaseSpec, boundaries: &[u64], w: impl Fn(f64) -> f64) -> Vec<Sample> {
    let chain = s.chain(0);
    let (a, b) = chain[0];
    let beta = DoubleDouble::from(s.alpha()) + 1.0;
    let mut sum = DoubleDouble::ZERO;
    let mut m = 0u64;
    let mut out = Vec::with_capacity(boundaries.len());
    for &n in boundaries {
        while m < n {
            m += 1;
            sum += w(m as f64);
        }
        let t = DoubleDouble::from(n);
        let l = if s.log_weight() { t.ln() } else { DoubleDouble::ZERO };
        let h0 = t.powf(beta) * (a * l + b);
        out.push(Sample {
            at: n as f64,
            value: (sum - h0).to_f64(),
        });
    }
    out
}

/// Estimate of `ζ(−α)`; `k` defaults to [`default_order`].
pub fn zeta_via_cesaro(alpha: f64, k: Option<u32>, x_max: f64, tol: f64) -> Result<CesaroEvaluation, ZetaError> {
    let s = StaircaseSpec::new(alpha, false)?;
    staircase_limit(&s, k.unwrap_or_else(|| default_order(alpha)), x_max, tol)
}

/// Estimate of `ζ′(−α)`, the negated Cesàro limit of the log-weighted
/// staircase.
pub fn zeta_prime_via_cesaro(alpha: f64, k: Option<u32>, x_max: f64, tol: f64) -> Result<CesaroEvaluation, ZetaError> {
    let s = StaircaseSpec::new(alpha, true)?;
    let mut e = staircase_limit(&s, k.unwrap_or_else(|| default_order(alpha)), x_max, tol)?;
    e.value = -e.value;
    for sample in &mut e.trace {
        sample.value = -sample.value;
    }
    Ok(e)
}

/// Cesàro limit of `x ↦ p({x})` at order `k`, sampled at integer
/// boundaries up to `x_max`, with tolerance [`LEMMA_TOL`].
///
/// For a mean-zero `p` the limit is 0.
pub fn lemma_witness(p: &PeriodicPolynomial, k: u32, x_max: f64) -> Result<CesaroEvaluation, ZetaError> {
    let min = 100.0 * FIRST_SAMPLE as f64;
    if !(x_max >= min && x_max.is_finite()) {
        return Err(ZetaError::UpperLimitTooSmall { min, got: x_max });
    }
    let grid: Vec<f64> = sample_boundaries(x_max.floor() as u64)
        .into_iter()
        .map(|n| n as f64)
        .collect();
    Ok(primitive_limit(
        &IntegrandSpec::periodic(p.clone()),
        k,
        &grid,
        LEMMA_TOL,
    )?)
}
