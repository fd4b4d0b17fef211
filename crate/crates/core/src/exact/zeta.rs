use super::{bernoulli, rational_from_int, Rational};

/// `ζ(−n)` for `n >= 0`: `−1/2` at `n = 0`, otherwise `−B_{n+1}/(n+1)`.
pub fn zeta_neg_int(n: u32) -> Rational {
    if n == 0 {
        return Rational::new((-1).into(), 2.into());
    }
    -bernoulli(n as usize + 1) / rational_from_int(u64::from(n) + 1)
}
