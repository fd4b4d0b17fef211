//! Independent reference values shared by the integration tests.

#![allow(dead_code)]

/// B_2 .. B_12, hard-coded so the oracle does not depend on the crate.
const B2K: [f64; 6] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
];

/// ζ(s) for real s ≠ 1 by Euler–Maclaurin with cut-off `N = 20`.
pub fn zeta_em(s: f64) -> f64 {
    let n = 20.0f64;
    let mut sum = 0.0;
    for m in 1..20 {
        sum += (m as f64).powf(-s);
    }
    sum += n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s);
    // B_{2j}/(2j)! · s(s+1)…(s+2j−2) · N^{−s−2j+1}
    let mut rising = s;
    let mut fact = 2.0;
    for (j, b) in B2K.iter().enumerate() {
        let two_j = 2.0 * (j as f64 + 1.0);
        sum += b / fact * rising * n.powf(-s - two_j + 1.0);
        rising *= (s + two_j - 1.0) * (s + two_j);
        fact *= (two_j + 1.0) * (two_j + 2.0);
    }
    sum
}

/// ζ′(s) for s > 1 as −Σ ln n / n^s, summed to `N = 10^6` with an
/// Euler–Maclaurin tail.
pub fn zeta_prime_direct(s: f64) -> f64 {
    let n_max = 1_000_000u64;
    let f = |t: f64| t.ln() * t.powf(-s);
    let mut sum = 0.0;
    let mut comp = 0.0;
    for m in 1..=n_max {
        let y = f(m as f64) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let n = n_max as f64;
    let tail_integral = n.powf(1.0 - s) * (n.ln() / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
    let fprime = n.powf(-s - 1.0) * (1.0 - s * n.ln());
    -(sum + tail_integral - 0.5 * f(n) - fprime / 12.0)
}

pub const ZETA_HALF: f64 = -1.460_354_508_809_586_8;
pub const ZETA_PRIME_0: f64 = -0.918_938_533_204_672_7;
pub const ZETA_PRIME_2: f64 = -0.937_548_254_315_843_7;
pub const ZETA_PRIME_3: f64 = -0.198_126_242_885_636_85;
