use crate::dd::DoubleDouble;

use super::staircase::StaircaseSpec;
use super::ZetaError;

/// Primitives `F_0(n) … F_k(n)` of a staircase at an integer boundary `n`.
///
/// State is carried in double-double: `F_j(n)` is recovered from
/// `F_j(n) + H_j(n)`, where `H_j(n) ~ n^{α+1+j}` dwarfs the answer.
///
/// For `α > −2` the primitives start at 0. For `α ≤ −2` the staircase is not
/// integrable at 0 and they start at 1 instead; this shifts `F_j` by a
/// polynomial of degree `< j`, which does not move the Cesàro limit.
#[derive(Clone, Debug)]
pub struct PrimitiveState {
    spec: StaircaseSpec,
    boundary: u64,
    values: Vec<DoubleDouble>,
    partial_sum: DoubleDouble,
    chain: Vec<(DoubleDouble, DoubleDouble)>,
    /// `H_j(boundary)`.
    h: Vec<DoubleDouble>,
    /// `i!`, exact in `f64` for the orders used here.
    fact: Vec<f64>,
}

impl PrimitiveState {
    /// State at boundary 1, carrying primitives up to order `k`.
    pub fn initial(spec: StaircaseSpec, k: u32) -> Result<Self, ZetaError> {
        let k = k as usize;
        let beta = spec.beta();
        if (1..=k).any(|m| beta + m as f64 == 0.0) {
            return Err(ZetaError::UnsupportedOrder {
                alpha: spec.alpha(),
                k: k as u32,
            });
        }
        let chain = spec.chain(k);
        let mut state = PrimitiveState {
            spec,
            boundary: 1,
            values: vec![DoubleDouble::ZERO; k + 1],
            partial_sum: DoubleDouble::ZERO,
            h: Vec::new(),
            chain,
            fact: (0..=k)
                .scan(1.0, |f, i| {
                    if i > 0 {
                        *f *= i as f64;
                    }
                    Some(*f)
                })
                .collect(),
        };
        let (h, w) = state.chain_at(1);
        state.partial_sum = w;
        state.values[0] = w - h[0];
        if beta > -1.0 {
            for (v, hj) in state.values.iter_mut().zip(&h).skip(1) {
                *v = -*hj;
            }
        }
        state.h = h;
        Ok(state)
    }

    /// `(H_0(n) … H_k(n), w(n))`.
    fn chain_at(&self, n: u64) -> (Vec<DoubleDouble>, DoubleDouble) {
        let t = DoubleDouble::from(n);
        let alpha = self.spec.alpha();
        let p = if alpha.fract() == 0.0 && alpha.abs() < 1e9 {
            t.powi(alpha as i32 + 1)
        } else {
            t.powf(DoubleDouble::from(alpha) + 1.0)
        };
        let l = if self.spec.log_weight() {
            t.ln()
        } else {
            DoubleDouble::ZERO
        };
        let mut pj = p;
        let h = self
            .chain
            .iter()
            .map(|&(a, b)| {
                let v = pj * (a * l + b);
                pj *= t;
                v
            })
            .collect();
        let mut w = p / t;
        if self.spec.log_weight() {
            w *= l;
        }
        (h, w)
    }

    pub fn spec(&self) -> &StaircaseSpec {
        &self.spec
    }

    pub fn boundary(&self) -> u64 {
        self.boundary
    }

    /// Highest primitive order carried.
    pub fn order(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    /// `F_j(n)`.
    pub fn value(&self, j: usize) -> f64 {
        self.values[j].to_f64()
    }

    pub fn values(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.to_f64()).collect()
    }

    /// `Σ_{m≤n} w(m)`.
    pub fn partial_sum(&self) -> f64 {
        self.partial_sum.to_f64()
    }

    /// `k!·F_k(n)/n^k`.
    pub fn normalized(&self) -> f64 {
        let k = self.values.len() - 1;
        let n = DoubleDouble::from(self.boundary);
        (self.values[k] * self.fact[k] / n.powi(k as i32)).to_f64()
    }

    /// Moves the state from `n` to `n + 1` by integrating
    /// `S_n − H_0(t)` over `[n, n+1]` in closed form.
    pub fn advance(&mut self) {
        let k = self.values.len() - 1;
        let next = self.boundary + 1;
        let (h_next, w_next) = self.chain_at(next);
        let s_n = self.partial_sum;
        let mut new = vec![DoubleDouble::ZERO; k + 1];
        for j in 1..=k {
            let mut acc = s_n / self.fact[j];
            for i in 0..j {
                acc += (self.values[j - i] + self.h[j - i]) / self.fact[i];
            }
            new[j] = acc - h_next[j];
        }
        self.partial_sum = s_n + w_next;
        new[0] = self.partial_sum - h_next[0];
        self.values = new;
        self.h = h_next;
        self.boundary = next;
    }
}

/// Functional form of [`PrimitiveState::advance`].
pub fn advance_primitives(mut state: PrimitiveState) -> PrimitiveState {
    state.advance();
    state
}
