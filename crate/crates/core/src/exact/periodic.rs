use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{bernoulli_table, binomial, rational_from_int, ExactError, Rational};

/// A polynomial in the fractional part `u = {x}`, i.e. the period-1 function
/// `x ↦ Σ_j coeffs[j]·{x}^j`.
///
/// Coefficients are stored in ascending degree order; trailing zeros are
/// stripped so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PeriodicPolynomial {
    coeffs: Vec<Rational>,
}

impl PeriodicPolynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = PeriodicPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        PeriodicPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_ratios(coeffs: &[(i64, i64)]) -> Self {
        Self::new(coeffs.iter().map(|&(p, q)| Rational::new(p.into(), q.into())).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Evaluates the polynomial at `u` (not reduced modulo 1).
    pub fn eval(&self, u: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * u + c)
    }

    /// Evaluates the periodic function at `x`, i.e. the polynomial at `{x}`.
    pub fn eval_periodic(&self, x: &Rational) -> Rational {
        self.eval(&(x - x.floor()))
    }

    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// Evaluates the polynomial at `u` in floating point.
    pub fn eval_f64(&self, u: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * u + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Evaluates the periodic function at real `x`.
    pub fn eval_periodic_f64(&self, x: f64) -> f64 {
        self.eval_f64(x - x.floor())
    }

    /// The antiderivative `u ↦ ∫_0^u p`, with zero constant term.
    pub fn antiderivative(&self) -> PeriodicPolynomial {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / rational_from_int(j as u64 + 1));
        }
        PeriodicPolynomial::new(coeffs)
    }

    /// `∫_0^1 p(u) du`.
    pub fn mean(&self) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c / rational_from_int(j as u64 + 1))
            .sum()
    }
}

impl std::fmt::Display for PeriodicPolynomial {
    /// Renders as `c0 + c1*u + c2*u^2 ...` with `u = {x}`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if j == 1 {
                        write!(f, "u")?;
                    } else {
                        write!(f, "u^{j}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Periodic mean `∫_0^1 p({x}) dx = Σ_j coeffs[j]/(j+1)`.
pub fn periodic_mean(p: &PeriodicPolynomial) -> Rational {
    p.mean()
}

/// The period-1 coefficient `P_m` in the decomposition of the zeta staircase
/// for exponent `n`:
///
/// `Σ_{k=1}^{⌊x⌋} k^n − x^{n+1}/(n+1) = Σ_{m=0}^{n} P_m({x}) x^m`.
///
/// Writing `⌊x⌋ + 1 = x + (1 − {x})` in the Faulhaber–Bernoulli formula and
/// collecting powers of `x` gives
///
/// `P_m(u) = 1/(n+1) · Σ_k C(n+1, k) C(n−k+1, m) B_k (1 − u)^{n−k−m+1}`,
///
/// which is returned expanded into the monomial basis of `u`.
pub fn pm_polynomial(n: u32, m: u32) -> Result<PeriodicPolynomial, ExactError> {
    if n == 0 || m > n {
        return Err(ExactError::IndexOutOfRange { n, m });
    }
    let b = bernoulli_table(n as usize);
    let (n64, m64) = (u64::from(n), u64::from(m));
    let scale = rational_from_int(n64 + 1);
    let mut coeffs = vec![Rational::zero(); n as usize + 2];
    for (k, bk) in b.iter().enumerate() {
        let k = k as u64;
        let p = n64 - k + 1;
        if p < m64 || bk.is_zero() {
            continue;
        }
        let weight = bk * rational_from_int(binomial(n64 + 1, k) * binomial(p, m64)) / &scale;
        // (1 − u)^e = Σ_i C(e, i) (−1)^i u^i
        let e = p - m64;
        for i in 0..=e {
            let mut term = &weight * rational_from_int(binomial(e, i));
            if i % 2 == 1 {
                term = -term;
            }
            coeffs[i as usize] += term;
        }
    }
    Ok(PeriodicPolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{bernoulli, faulhaber_sum};

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    /// Independent oracle: expand f(x) = ((x − u)² + (x − u) − x²)/2 for
    /// n = 1 by hand: x·(1/2 − u) + (u² − u)/2.
    #[test]
    fn n1_matches_hand_expansion() {
        assert_eq!(
            pm_polynomial(1, 0).unwrap(),
            PeriodicPolynomial::from_ratios(&[(0, 1), (-1, 2), (1, 2)])
        );
        assert_eq!(
            pm_polynomial(1, 1).unwrap(),
            PeriodicPolynomial::from_ratios(&[(1, 2), (-1, 1)])
        );
    }

    #[test]
    fn index_out_of_range() {
        assert_eq!(pm_polynomial(2, 3), Err(ExactError::IndexOutOfRange { n: 2, m: 3 }));
        assert_eq!(pm_polynomial(0, 0), Err(ExactError::IndexOutOfRange { n: 0, m: 0 }));
    }

    #[test]
    fn means_cancel_except_constant_term() {
        for n in 1..=12u32 {
            for m in 1..=n {
                assert!(periodic_mean(&pm_polynomial(n, m).unwrap()).is_zero(), "n={n} m={m}");
            }
            let p0 = periodic_mean(&pm_polynomial(n, 0).unwrap());
            assert_eq!(p0, -bernoulli(n as usize + 1) / rational_from_int(u64::from(n) + 1));
        }
    }

    #[test]
    fn degree_bound() {
        for n in 1..=8u32 {
            for m in 0..=n {
                let d = pm_polynomial(n, m).unwrap().degree().unwrap_or(0);
                assert!(d <= n as usize + 1);
            }
        }
    }

    #[test]
    fn decomposition_reconstructs_staircase() {
        // 100 rational sample points in (0, 20): x = j·(20/101) for j = 1..=100.
        for n in 1..=6u32 {
            let polys: Vec<_> = (0..=n).map(|m| pm_polynomial(n, m).unwrap()).collect();
            for j in 1..=100i64 {
                let x = r(20 * j, 101);
                let floor: u64 = x.floor().to_integer().try_into().unwrap();
                let mut xpow = Rational::one();
                let mut total = Rational::zero();
                for p in &polys {
                    total += p.eval_periodic(&x) * &xpow;
                    xpow *= &x;
                }
                // xpow is now x^{n+1}
                let expected = faulhaber_sum(n, floor + 1).unwrap() - &xpow / rational_from_int(u64::from(n) + 1);
                assert_eq!(total, expected, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn mean_and_antiderivative() {
        let p = PeriodicPolynomial::from_ratios(&[(1, 2), (-1, 1)]);
        assert!(p.mean().is_zero());
        assert_eq!(periodic_mean(&PeriodicPolynomial::constant(r(1, 1))), r(1, 1));
        let q = p.antiderivative();
        assert_eq!(q, PeriodicPolynomial::from_ratios(&[(0, 1), (1, 2), (-1, 2)]));
        assert_eq!(q.eval(&r(1, 1)), p.mean());
    }

    #[test]
    fn trims_and_displays() {
        let p = PeriodicPolynomial::from_ratios(&[(1, 2), (-1, 1), (0, 1)]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.to_string(), "1/2 - u");
        assert_eq!(PeriodicPolynomial::zero().to_string(), "0");
        assert_eq!(pm_polynomial(1, 0).unwrap().to_string(), "-1/2*u + 1/2*u^2");
    }

    #[test]
    fn float_evaluation_is_periodic() {
        let p = pm_polynomial(3, 2).unwrap();
        for &u in &[0.1, 0.25, 0.7] {
            let a = p.eval_periodic_f64(u);
            let b = p.eval_periodic_f64(u + 7.0);
            assert!((a - b).abs() < 1e-12);
        }
    }
}
