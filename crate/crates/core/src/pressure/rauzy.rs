//! Affinity dimension of the Rauzy Γ_N subsystems along an N-ladder.

use num::rational::BigRational;
use serde_json::json;

use super::affinity::affinity_from_tables;
use super::estimate::{PairSample, DEFAULT_PAIR_SAMPLES, PAIR_SEED};
use crate::error::Result;
use crate::estimate::DimensionEstimate;
use crate::linalg::format_rational;
use crate::semigroup::rauzy::rauzy_gamma_system;
use crate::semigroup::LevelTables;

pub use crate::semigroup::rauzy::default_epsilon;

/// Depth used when none is given: 4 up to 30 letters, 3 up to 300, else 2.
pub fn default_depth(letters: usize) -> usize {
    if letters <= 30 {
        4
    } else if letters <= 300 {
        3
    } else {
        2
    }
}

/// Rungs `N/4, N/2, N` (each at least 1, duplicates removed).
pub fn ladder(n: usize) -> Vec<usize> {
    let mut rungs = vec![(n / 4).max(1), (n / 2).max(1), n.max(1)];
    rungs.dedup();
    rungs
}

/// Affinity dimension of `M_ε⁻¹ Γ_N M_ε` with the ladder of smaller `N`
/// reported alongside. With `depth = None` each rung uses [`default_depth`].
pub fn rauzy_dimension(
    n: usize,
    depth: Option<usize>,
    tol: f64,
    eps: &BigRational,
) -> Result<DimensionEstimate> {
    let mut rungs = Vec::new();
    let mut last = None;
    for rung in ladder(n) {
        let sys = rauzy_gamma_system(rung, eps)?;
        let d = depth.unwrap_or_else(|| default_depth(sys.len()));
        log::info!("rauzy ladder: N = {rung}, {} letters, depth {d}", sys.len());
        let tables = LevelTables::build(&sys, d)?;
        let pairs = PairSample::draw(&sys, d / 2, DEFAULT_PAIR_SAMPLES, PAIR_SEED)?;
        let est = affinity_from_tables(&tables, &pairs, tol);
        rungs.push(json!({
            "N": rung,
            "letters": sys.len(),
            "depth": d,
            "value": est.value,
            "bracket_lo": est.bracket_lo,
            "bracket_hi": est.bracket_hi,
        }));
        last = Some(est);
    }
    let values: Vec<f64> = rungs
        .iter()
        .map(|r| r["value"].as_f64().unwrap_or(f64::NAN))
        .collect();
    let nondecreasing = values.windows(2).all(|w| w[1] >= w[0] - 2.0 * tol);
    let est = last.expect("ladder is nonempty");
    Ok(est
        .with("N", n)
        .with("epsilon", format_rational(eps))
        .with("ladder", rungs)
        .with("ladder_nondecreasing_within_2tol", nondecreasing))
}
