use crate::compensated::NeumaierSum;
use crate::dd::DoubleDouble;
use crate::finite_part::{fp_log_power_integral, fp_power_integral};

use super::ZetaError;

/// Smallest allowed distance of `alpha` from the pole at `−1`.
pub const POLE_GUARD: f64 = 1e-6;

/// The staircase `f(x) = Σ_{m≤x} w(m) − F.p.∫_0^x w(t) dt` with weight
/// `w(t) = t^α` or, when `log_weight` is set, `w(t) = t^α ln t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StaircaseSpec {
    alpha: f64,
    log_weight: bool,
}

impl StaircaseSpec {
    pub fn new(alpha: f64, log_weight: bool) -> Result<Self, ZetaError> {
        if !alpha.is_finite() || (alpha + 1.0).abs() < POLE_GUARD {
            return Err(ZetaError::NearPole { alpha });
        }
        Ok(StaircaseSpec { alpha, log_weight })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn log_weight(&self) -> bool {
        self.log_weight
    }

    /// `α + 1`, the exponent of the finite-part term.
    pub fn beta(&self) -> f64 {
        self.alpha + 1.0
    }

    /// `w(m)`.
    pub fn summand(&self, m: u64) -> f64 {
        let x = m as f64;
        let p = x.powf(self.alpha);
        if self.log_weight {
            p * x.ln()
        } else {
            p
        }
    }

    /// `F.p.∫_0^x w(t) dt`.
    pub fn finite_part(&self, x: f64) -> f64 {
        let r = if self.log_weight {
            fp_log_power_integral(self.alpha, x)
        } else {
            fp_power_integral(self.alpha, x)
        };
        r.unwrap_or(f64::NAN)
    }

    /// Coefficients `(a_j, b_j)`, `j = 0..=k`, of the antiderivative chain
    /// `H_j(t) = t^{β+j}(a_j ln t + b_j)` with `H_0 = F.p.∫_0^t w`.
    pub(crate) fn chain(&self, k: usize) -> Vec<(DoubleDouble, DoubleDouble)> {
        let beta = DoubleDouble::from(self.alpha) + 1.0;
        let inv = beta.recip();
        let mut out = Vec::with_capacity(k + 1);
        let (mut a, mut b) = if self.log_weight {
            (inv, -(inv * inv))
        } else {
            (DoubleDouble::ZERO, inv)
        };
        out.push((a, b));
        for j in 1..=k {
            // ∫ t^{γ}(a ln t + b) = t^{γ+1}(a ln t/(γ+1) + b/(γ+1) − a/(γ+1)²)
            let g1 = (beta + j as f64).recip();
            let na = a * g1;
            b = b * g1 - a * g1 * g1;
            a = na;
            out.push((a, b));
        }
        out
    }
}

/// `f(x)` for `x > 0`.
pub fn staircase_value(s: &StaircaseSpec, x: f64) -> Result<f64, ZetaError> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(ZetaError::NonPositiveArgument(x));
    }
    let mut sum = NeumaierSum::new();
    for m in 1..=(x.floor() as u64) {
        sum += s.summand(m);
    }
    Ok(sum.value() - s.finite_part(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_values() {
        let s = StaircaseSpec::new(0.0, false).unwrap();
        assert!((staircase_value(&s, 3.5).unwrap() + 0.5).abs() < 1e-15);
        let s = StaircaseSpec::new(1.0, false).unwrap();
        assert!((staircase_value(&s, 2.5).unwrap() + 0.125).abs() < 1e-15);
        let s = StaircaseSpec::new(0.0, true).unwrap();
        let ln2 = std::f64::consts::LN_2;
        assert!((staircase_value(&s, 2.0).unwrap() - (2.0 - ln2)).abs() < 1e-15);
    }

    #[test]
    fn pole_guard() {
        assert!(StaircaseSpec::new(-1.0, false).is_err());
        assert!(StaircaseSpec::new(-1.0 + 5e-7, true).is_err());
        assert!(StaircaseSpec::new(-1.0 + 2e-6, false).is_ok());
        assert!(StaircaseSpec::new(f64::NAN, false).is_err());
    }

    #[test]
    fn rejects_non_positive_x() {
        let s = StaircaseSpec::new(0.0, false).unwrap();
        assert_eq!(staircase_value(&s, 0.0), Err(ZetaError::NonPositiveArgument(0.0)));
    }

    #[test]
    fn chain_is_antiderivative() {
        for &(alpha, log) in &[(0.5, false), (-0.5, true), (2.0, true), (-2.5, false)] {
            let s = StaircaseSpec::new(alpha, log).unwrap();
            let c = s.chain(3);
            let beta = s.beta();
            let h = |j: usize, t: f64| {
                let (a, b) = c[j];
                t.powf(beta + j as f64) * (a.to_f64() * t.ln() + b.to_f64())
            };
            for j in 1..=3 {
                let t = 2.7;
                let d = 1e-5;
                let num = (h(j, t + d) - h(j, t - d)) / (2.0 * d);
                assert!(
                    (num - h(j - 1, t)).abs() < 1e-7 * (1.0 + num.abs()),
                    "{alpha} {log} j={j}"
                );
            }
            // H_0 is the finite part itself
            assert!((h(0, 3.0) - s.finite_part(3.0)).abs() < 1e-13);
        }
    }
}
