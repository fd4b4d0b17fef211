use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{rational_from_int, Rational};

/// Memoized Bernoulli numbers `B_0..B_N` with the `B_1 = −1/2` convention.
///
/// Values are produced by the recurrence
/// `B_n = −1/(n+1) · Σ_{k<n} C(n+1, k) B_k` and the table only ever grows, so
/// a value once computed is never recomputed. The recurrence is quadratic in
/// `n` with big-integer binomials; indices up to a few thousand are practical.
#[derive(Clone, Debug)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliTable {
    pub fn new() -> Self {
        BernoulliTable {
            values: vec![Rational::one()],
        }
    }

    /// Number of computed entries (always at least one: `B_0`).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Returns `B_n` if it has already been computed.
    pub fn cached(&self, n: usize) -> Option<&Rational> {
        self.values.get(n)
    }

    /// Extends the table so that `B_0..=B_n` are all present.
    pub fn extend_to(&mut self, n: usize) {
        while self.values.len() <= n {
            let m = self.values.len() as u64;
            // Row C(m+1, k), k = 0..m-1, built incrementally.
            let mut binom = BigInt::one();
            let mut sum = Rational::zero();
            for (k, b) in self.values.iter().enumerate() {
                if !b.is_zero() {
                    sum += b * rational_from_int(binom.clone());
                }
                let k = k as u64;
                binom = binom * (m + 1 - k) / (k + 1);
            }
            let next = -sum / rational_from_int(m + 1);
            self.values.push(next);
        }
    }

    pub fn get(&mut self, n: usize) -> Rational {
        self.extend_to(n);
        self.values[n].clone()
    }
}

fn shared_table() -> &'static Mutex<BernoulliTable> {
    static TABLE: OnceLock<Mutex<BernoulliTable>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(BernoulliTable::new()))
}

/// `B_n`, served from a process-wide memoized table.
pub fn bernoulli(n: usize) -> Rational {
    let mut table = shared_table().lock().unwrap_or_else(|e| e.into_inner());
    table.get(n)
}

/// Snapshot of `B_0..=B_n` from the process-wide table.
pub fn bernoulli_table(n: usize) -> Vec<Rational> {
    let mut table = shared_table().lock().unwrap_or_else(|e| e.into_inner());
    table.extend_to(n);
    table.values()[..=n].to_vec()
}
