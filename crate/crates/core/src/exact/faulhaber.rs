use num_traits::Zero;

use super::{bernoulli_table, binomial, rational_from_int, ExactError, Rational};

/// Power sum `Σ_{k=1}^{m−1} k^n` together with the inputs that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaulhaberResult {
    pub value: Rational,
    pub n: u32,
    pub m: u64,
}

impl FaulhaberResult {
    pub fn compute(n: u32, m: u64) -> Result<Self, ExactError> {
        Ok(FaulhaberResult {
            value: faulhaber_sum(n, m)?,
            n,
            m,
        })
    }
}

/// `Σ_{k=1}^{m−1} k^n` evaluated with the Faulhaber–Bernoulli formula
/// `1/(n+1) · Σ_{k=0}^{n} C(n+1, k) B_k m^{n−k+1}`.
///
/// The formula is used exactly as written, i.e. for `n >= 1` only, and the
/// sum stops at `m − 1`.
pub fn faulhaber_sum(n: u32, m: u64) -> Result<Rational, ExactError> {
    if n == 0 {
        return Err(ExactError::ExponentTooSmall(n));
    }
    if m == 0 {
        return Err(ExactError::EmptyUpperBound(m));
    }
    let b = bernoulli_table(n as usize);
    let n64 = u64::from(n);
    let m_big = rational_from_int(m);
    let mut total = Rational::zero();
    let mut power = rational_from_int(1);
    let mut powers = Vec::with_capacity(n as usize + 2);
    for _ in 0..=n + 1 {
        powers.push(power.clone());
        power *= &m_big;
    }
    for (k, bk) in b.iter().enumerate() {
        if bk.is_zero() {
            continue;
        }
        let k64 = k as u64;
        total += bk * rational_from_int(binomial(n64 + 1, k64)) * &powers[(n64 - k64 + 1) as usize];
    }
    Ok(total / rational_from_int(n64 + 1))
}
