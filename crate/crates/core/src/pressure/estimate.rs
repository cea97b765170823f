//! Pressure at a fixed exponent, with sampled multiplicativity brackets.

use rand::Rng;
use serde::Serialize;

use super::sums::log_partition;
use crate::error::{Error, Result};
use crate::linalg::{singular_values, LogRatios};
use crate::rng::stream;
use crate::semigroup::words::word_count;
use crate::semigroup::{LevelTables, SystemSpec};

pub const DEFAULT_PAIR_SAMPLES: usize = 10_000;
pub const PAIR_SEED: u64 = 0x5eed;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PressureEstimate {
    pub s: f64,
    pub depth: usize,
    /// `(1/n) ln Σ_n φˢ` at `n = depth`.
    pub raw: f64,
    /// `min_n (1/n)(ln Σ_n + ln C)`.
    pub upper: f64,
    /// `max_n (1/n)(ln Σ_n + ln c)`.
    pub lower: f64,
    pub submult_constant: f64,
    pub supermult_constant: f64,
    /// The constants are sampled, so the brackets are heuristic.
    pub heuristic: bool,
}

/// Log ratios of sampled word pairs `(u, v, uv)`.
#[derive(Clone, Debug)]
pub struct PairSample {
    pairs: Vec<[LogRatios; 3]>,
    pub exhaustive: bool,
}

fn random_word<R: Rng>(rng: &mut R, k: usize, max_len: usize) -> Vec<usize> {
    let len = rng.random_range(1..=max_len);
    (0..len).map(|_| rng.random_range(0..k)).collect()
}

fn all_words(k: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..k {
                let mut x = w.clone();
                x.push(i);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

impl PairSample {
    /// All pairs of words of length `1..=max_len` when there are at most
    /// `count` of them, otherwise `count` uniformly drawn pairs.
    pub fn draw(sys: &SystemSpec, max_len: usize, count: usize, seed: u64) -> Result<Self> {
        let k = sys.len();
        let max_len = max_len.max(1);
        let words_total = word_count(k, max_len, true);
        let exhaustive = words_total.saturating_mul(words_total) <= count as u128;
        let pairs_idx: Vec<(Vec<usize>, Vec<usize>)> = if exhaustive {
            let ws = all_words(k, max_len);
            ws.iter()
                .flat_map(|u| ws.iter().map(move |v| (u.clone(), v.clone())))
                .collect()
        } else {
            let mut rng = stream(seed, 0);
            (0..count)
                .map(|_| {
                    (
                        random_word(&mut rng, k, max_len),
                        random_word(&mut rng, k, max_len),
                    )
                })
                .collect()
        };
        let pairs = crate::par::map_slice(&pairs_idx, |(u, v)| -> Result<[LogRatios; 3]> {
            let uv: Vec<usize> = u.iter().chain(v.iter()).copied().collect();
            Ok([
                singular_values(&sys.product(u))?.log_ratios(),
                singular_values(&sys.product(v))?.log_ratios(),
                singular_values(&sys.product(&uv))?.log_ratios(),
            ])
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        Ok(PairSample { pairs, exhaustive })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `(ln C, ln c)` with `C = max(1, max ratio)`, `c = min(1, min ratio)`
    /// where ratio is `φˢ(A_u A_v) / (φˢ(A_u) φˢ(A_v))`.
    pub fn log_constants(&self, s: f64) -> (f64, f64) {
        let mut hi = 0.0f64;
        let mut lo = 0.0f64;
        for [u, v, uv] in &self.pairs {
            let r = uv.log_svf_unchecked(s) - u.log_svf_unchecked(s) - v.log_svf_unchecked(s);
            hi = hi.max(r);
            lo = lo.min(r);
        }
        (hi, lo)
    }
}

/// Pressure curves at one exponent from precomputed tables and pairs.
pub fn pressure_from_tables(tables: &LevelTables, pairs: &PairSample, s: f64) -> PressureEstimate {
    let (ln_c_up, ln_c_lo) = pairs.log_constants(s);
    let mut upper = f64::INFINITY;
    let mut lower = f64::NEG_INFINITY;
    let mut raw = f64::NAN;
    for n in 1..=tables.depth() {
        let ls = log_partition(tables.level(n), s);
        let nf = n as f64;
        upper = upper.min((ls + ln_c_up) / nf);
        lower = lower.max((ls + ln_c_lo) / nf);
        raw = ls / nf;
    }
    PressureEstimate {
        s,
        depth: tables.depth(),
        raw,
        upper,
        lower,
        submult_constant: ln_c_up.exp(),
        supermult_constant: ln_c_lo.exp(),
        heuristic: true,
    }
}

/// `(1/n)(ln Σ_n + ln C)` for each `n` in `ns`.
pub fn fekete_sequence(tables: &LevelTables, pairs: &PairSample, s: f64, ns: &[usize]) -> Vec<f64> {
    let (ln_c, _) = pairs.log_constants(s);
    ns.iter()
        .map(|&n| (log_partition(tables.level(n), s) + ln_c) / n as f64)
        .collect()
}

pub fn pressure_estimate(sys: &SystemSpec, s: f64, n_max: usize) -> Result<PressureEstimate> {
    if !(s >= 0.0) || !s.is_finite() {
        return Err(Error::DomainError {
            value: s,
            domain: "s >= 0",
        });
    }
    sys.require_contracting_class()?;
    let tables = LevelTables::build(sys, n_max)?;
    let pairs = PairSample::draw(sys, n_max / 2, DEFAULT_PAIR_SAMPLES, PAIR_SEED)?;
    Ok(pressure_from_tables(&tables, &pairs, s))
}
