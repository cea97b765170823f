//! Compensated log-sum-exp over a level of words.

use crate::error::Result;
use crate::linalg::LogRatios;
use crate::par;
use crate::semigroup::{LevelTables, SystemSpec};

/// Fixed chunk length of the reduction tree; independent of worker count.
const CHUNK: usize = 1 << 13;

#[derive(Clone, Copy, Default)]
struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    #[inline]
    fn add(&mut self, x: f64) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }
}

/// `ln Σ exp(x_k)` with a fixed-order compensated sum.
pub fn log_sum_exp(xs: &[f64]) -> f64 {
    let m = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return m;
    }
    let chunks: Vec<&[f64]> = xs.chunks(CHUNK).collect();
    let partial = par::map_slice(&chunks, |c| {
        let mut k = Kahan::default();
        for &x in c.iter() {
            k.add((x - m).exp());
        }
        k.sum
    });
    let mut k = Kahan::default();
    for p in partial {
        k.add(p);
    }
    m + k.sum.ln()
}

/// `ln Σ_{|w| = n} φˢ(A_w)` from precomputed log ratios.
pub fn log_partition(level: &[LogRatios], s: f64) -> f64 {
    let m = level
        .iter()
        .map(|r| r.log_svf_unchecked(s))
        .fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return m;
    }
    let chunks: Vec<&[LogRatios]> = level.chunks(CHUNK).collect();
    let partial = par::map_slice(&chunks, |c| {
        let mut k = Kahan::default();
        for r in c.iter() {
            k.add((r.log_svf_unchecked(s) - m).exp());
        }
        k.sum
    });
    let mut k = Kahan::default();
    for p in partial {
        k.add(p);
    }
    m + k.sum.ln()
}

/// `ln Σ_{A ∈ 𝔄ⁿ} φˢ(A)`.
pub fn partition_sum(sys: &SystemSpec, s: f64, n: usize) -> Result<f64> {
    crate::linalg::LogRatios::default().log_svf(s)?;
    let tables = LevelTables::build(sys, n)?;
    Ok(log_partition(tables.level(n), s))
}
