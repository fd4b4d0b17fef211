/// Maximum number of samples kept in [`CesaroEvaluation::trace`].
pub const TRACE_LEN: usize = 16;

/// One point of a generalized-limit trace: the abscissa (`n` for series and
/// staircases, `X` for integrals) and the normalized mean there.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sample {
    pub at: f64,
    pub value: f64,
}

/// Result of a numeric Cesàro evaluation.
///
/// Divergence is a result, not an error: `converged` is false whenever the
/// dispersion of the tail samples exceeds the requested tolerance or any
/// tail sample is not finite.
#[derive(Clone, Debug, PartialEq)]
pub struct CesaroEvaluation {
    pub value: f64,
    /// Cesàro order `k` (integral for series and staircases, real for
    /// Riesz means of integrals).
    pub order: f64,
    /// Terms summed, or the largest abscissa reached.
    pub n_terms: u64,
    /// The last (at most [`TRACE_LEN`]) tail samples, in increasing abscissa.
    pub trace: Vec<Sample>,
    /// `max − min` over the tail samples.
    pub error_estimate: f64,
    pub converged: bool,
}

impl CesaroEvaluation {
    /// Builds the verdict from `samples` using the last `tail_len` of them.
    ///
    /// Panics if fewer than two samples are supplied.
    pub(crate) fn from_tail(order: f64, n_terms: u64, samples: &[Sample], tail_len: usize, tol: f64) -> Self {
        assert!(samples.len() >= 2, "a verdict needs at least two samples");
        let tail_len = tail_len.clamp(2, samples.len());
        let tail = &samples[samples.len() - tail_len..];
        let value = tail[tail.len() - 1].value;
        let finite = tail.iter().all(|s| s.value.is_finite());
        let error_estimate = if finite {
            let (lo, hi) = tail.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
                (lo.min(s.value), hi.max(s.value))
            });
            hi - lo
        } else {
            f64::INFINITY
        };
        CesaroEvaluation {
            value,
            order,
            n_terms,
            trace: tail[tail.len().saturating_sub(TRACE_LEN)..].to_vec(),
            error_estimate,
            converged: finite && error_estimate <= tol,
        }
    }
}
