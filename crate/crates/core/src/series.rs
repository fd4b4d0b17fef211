//! `(C, k)` summation of real series by iterated partial sums.
//!
//! `A_n^0 = Σ_{j≤n} a_j`, `A_n^{k+1} = Σ_{i≤n} A_i^k`, and the Cesàro means
//! are `C_n^k = A_n^k / C(n+k, k)` with the exact binomial normalizer. Each
//! prefix pass is accumulated with Neumaier compensation.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::compensated::prefix_sums;
use crate::evaluation::{CesaroEvaluation, Sample};
use crate::exact::Rational;

/// Minimum number of tail samples a verdict is based on.
pub const MIN_TAIL: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("at least {needed} terms are needed, got {got}")]
    TooFewTerms { needed: u64, got: u64 },
}

/// Known value of a series, when one is available for cross-checks.
#[derive(Clone, Debug, PartialEq)]
pub enum KnownSum {
    Exact(Rational),
    Float(f64),
}

type TermFn = dyn Fn(u64) -> f64 + Send + Sync;

/// A real series `Σ_{n ≥ start} a_n` given by a deterministic term generator.
///
/// The generator is called with the series' own index `n`, starting at
/// `start`; position `i` of every partial-sum vector corresponds to
/// `n = start + i`.
#[derive(Clone)]
pub struct SeriesSpec {
    start: u64,
    term: Arc<TermFn>,
    known_sum: Option<KnownSum>,
}

impl fmt::Debug for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeriesSpec")
            .field("start", &self.start)
            .field("known_sum", &self.known_sum)
            .finish_non_exhaustive()
    }
}

impl SeriesSpec {
    pub fn new(term: impl Fn(u64) -> f64 + Send + Sync + 'static) -> Self {
        SeriesSpec {
            start: 0,
            term: Arc::new(term),
            known_sum: None,
        }
    }

    pub fn starting_at(mut self, start: u64) -> Self {
        self.start = start;
        self
    }

    pub fn with_known_sum(mut self, sum: KnownSum) -> Self {
        self.known_sum = Some(sum);
        self
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn known_sum(&self) -> Option<&KnownSum> {
        self.known_sum.as_ref()
    }

    /// `a_n` for the series index `n`.
    pub fn term(&self, n: u64) -> f64 {
        (self.term)(n)
    }

    /// `Σ (−1)^n`, n ≥ 0.
    pub fn alternating() -> Self {
        Self::new(|n| if n % 2 == 0 { 1.0 } else { -1.0 })
    }

    /// `Σ (−1)^n n`, n ≥ 0.
    pub fn alternating_linear() -> Self {
        Self::new(|n| if n % 2 == 0 { n as f64 } else { -(n as f64) })
    }

    /// `Σ r^n`, n ≥ 0. Carries the known sum `1/(1−r)` when `|r| < 1`.
    pub fn geometric(r: f64) -> Self {
        let s = Self::new(move |n| r.powf(n as f64));
        if r.abs() < 1.0 {
            s.with_known_sum(KnownSum::Float(1.0 / (1.0 - r)))
        } else {
            s
        }
    }

    /// `Σ n^p`, n ≥ 1.
    pub fn power(p: f64) -> Self {
        Self::new(move |n| (n as f64).powf(p)).starting_at(1)
    }

    /// `Σ (−1)^{n+1}/n = ln 2`, n ≥ 1.
    pub fn alternating_harmonic() -> Self {
        Self::new(|n| if n % 2 == 1 { 1.0 / n as f64 } else { -1.0 / n as f64 })
            .starting_at(1)
            .with_known_sum(KnownSum::Float(std::f64::consts::LN_2))
    }
}

/// `A_n^k` for positions `0..=n_max` (series indices `start..=start+n_max`).
pub fn iterated_partial_sums(s: &SeriesSpec, k: u32, n_max: u64) -> Result<Vec<f64>, SeriesError> {
    if n_max < 1 {
        return Err(SeriesError::TooFewTerms {
            needed: 2,
            got: n_max + 1,
        });
    }
    let terms: Vec<f64> = (0..=n_max).map(|i| s.term(s.start + i)).collect();
    let mut sums = prefix_sums(&terms);
    for _ in 0..k {
        sums = prefix_sums(&sums);
    }
    Ok(sums)
}

/// `C(n+k, k)` in floating point.
fn binomial_normalizer(n: u64, k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * (n as f64 + f64::from(i)) / f64::from(i))
}

/// The Cesàro means `C_n^k = A_n^k / C(n+k, k)` for `n = 0..=n_max`.
pub fn cesaro_means(s: &SeriesSpec, k: u32, n_max: u64) -> Result<Vec<f64>, SeriesError> {
    let sums = iterated_partial_sums(s, k, n_max)?;
    Ok(sums
        .iter()
        .enumerate()
        .map(|(n, a)| a / binomial_normalizer(n as u64, k))
        .collect())
}

/// Diagnostic: `k!·A_n^k / n^k`, the asymptotic form of the normalization.
/// Position 0 is skipped for `k > 0` (it would divide by zero).
pub fn cesaro_means_asymptotic(s: &SeriesSpec, k: u32, n_max: u64) -> Result<Vec<f64>, SeriesError> {
    let sums = iterated_partial_sums(s, k, n_max)?;
    let k_fact: f64 = (1..=k).map(f64::from).product();
    Ok(sums
        .iter()
        .enumerate()
        .map(|(n, a)| {
            if k == 0 {
                *a
            } else if n == 0 {
                f64::NAN
            } else {
                k_fact * a / (n as f64).powi(k as i32)
            }
        })
        .collect())
}

/// Number of trailing means the convergence verdict looks at.
pub fn tail_len(n_max: u64) -> usize {
    MIN_TAIL.max(((n_max + 1) / 10) as usize)
}

/// Evaluates `Σ a_n (C, k)` from the means up to position `n_max`.
///
/// The value is `C_{n_max}^k`; convergence is judged from the dispersion of
/// the last `max(8, (n_max+1)/10)` means against `tol`.
pub fn cesaro_sum(s: &SeriesSpec, k: u32, n_max: u64, tol: f64) -> Result<CesaroEvaluation, SeriesError> {
    let terms = n_max + 1;
    if terms < MIN_TAIL as u64 {
        return Err(SeriesError::TooFewTerms {
            needed: MIN_TAIL as u64,
            got: terms,
        });
    }
    let means = cesaro_means(s, k, n_max)?;
    let tail = tail_len(n_max);
    let first = means.len() - tail;
    let samples: Vec<Sample> = means[first..]
        .iter()
        .enumerate()
        .map(|(i, &value)| Sample {
            at: (s.start + (first + i) as u64) as f64,
            value,
        })
        .collect();
    Ok(CesaroEvaluation::from_tail(f64::from(k), terms, &samples, tail, tol))
}

/// Smallest `k <= k_max` at which [`cesaro_sum`] converges.
pub fn detect_order(
    s: &SeriesSpec,
    k_max: u32,
    n_max: u64,
    tol: f64,
) -> Result<Option<(u32, CesaroEvaluation)>, SeriesError> {
    for k in 0..=k_max {
        let eval = cesaro_sum(s, k, n_max, tol)?;
        if eval.converged {
            return Ok(Some((k, eval)));
        }
    }
    Ok(None)
}
