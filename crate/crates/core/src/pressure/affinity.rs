//! The affinity dimension as the zero of the pressure.

use serde_json::json;

use super::estimate::{PairSample, DEFAULT_PAIR_SAMPLES, PAIR_SEED};
use super::sums::log_partition;
use crate::error::{Error, Result};
use crate::estimate::{DimensionEstimate, Method};
use crate::semigroup::{LevelTables, SystemSpec};

/// Grid on which monotonicity and convexity of the pressure are checked.
pub const GRID_STEP: f64 = 0.25;

const CONVEXITY_SLACK: f64 = 1e-9;

/// Raw, upper and lower pressure curves over precomputed tables.
pub struct PressureCurves<'a> {
    tables: &'a LevelTables,
    pairs: &'a PairSample,
}

impl<'a> PressureCurves<'a> {
    pub fn new(tables: &'a LevelTables, pairs: &'a PairSample) -> Self {
        PressureCurves { tables, pairs }
    }

    pub fn raw(&self, s: f64) -> f64 {
        let n = self.tables.depth();
        log_partition(self.tables.level(n), s) / n as f64
    }

    fn bracket(&self, s: f64) -> (f64, f64) {
        let (ln_up, ln_lo) = self.pairs.log_constants(s);
        let mut upper = f64::INFINITY;
        let mut lower = f64::NEG_INFINITY;
        for n in 1..=self.tables.depth() {
            let ls = log_partition(self.tables.level(n), s);
            upper = upper.min((ls + ln_up) / n as f64);
            lower = lower.max((ls + ln_lo) / n as f64);
        }
        (lower, upper)
    }

    pub fn upper(&self, s: f64) -> f64 {
        self.bracket(s).1
    }

    pub fn lower(&self, s: f64) -> f64 {
        self.bracket(s).0
    }
}

/// Zero of a decreasing function on `[0, 2]`; `None` when `f(2) >= 0`,
/// `Some(0)` when `f(0) <= 0`.
fn bisect<F: Fn(f64) -> f64>(f: F, tol: f64) -> Option<f64> {
    if f(0.0) <= 0.0 {
        return Some(0.0);
    }
    if f(2.0) >= 0.0 {
        return None;
    }
    let (mut lo, mut hi) = (0.0f64, 2.0f64);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

pub struct GridReport {
    pub s: Vec<f64>,
    pub raw: Vec<f64>,
    pub strictly_decreasing: bool,
    pub convex: bool,
    pub min_second_difference: f64,
    /// Second differences whose stencil does not straddle `s = 1`, where
    /// `φˢ` switches branch and the slope of the pressure drops.
    pub min_second_difference_piecewise: f64,
    pub convex_piecewise: bool,
    pub lipschitz: f64,
}

pub fn pressure_grid(curves: &PressureCurves<'_>) -> GridReport {
    let steps = (2.0 / GRID_STEP).round() as usize;
    let s: Vec<f64> = (0..=steps).map(|k| k as f64 * GRID_STEP).collect();
    let raw: Vec<f64> = s.iter().map(|&x| curves.raw(x)).collect();
    let strictly_decreasing = raw.windows(2).all(|w| w[1] < w[0]);
    let min_second_difference = raw
        .windows(3)
        .map(|w| w[2] - 2.0 * w[1] + w[0])
        .fold(f64::INFINITY, f64::min);
    let min_second_difference_piecewise = raw
        .windows(3)
        .enumerate()
        .filter(|(i, _)| !(s[*i] < 1.0 && s[i + 2] > 1.0))
        .map(|(_, w)| w[2] - 2.0 * w[1] + w[0])
        .fold(f64::INFINITY, f64::min);
    let lipschitz = raw
        .windows(2)
        .map(|w| (w[1] - w[0]).abs() / GRID_STEP)
        .fold(0.0, f64::max);
    GridReport {
        s,
        raw,
        strictly_decreasing,
        convex: min_second_difference >= -CONVEXITY_SLACK,
        min_second_difference,
        min_second_difference_piecewise,
        convex_piecewise: min_second_difference_piecewise >= -CONVEXITY_SLACK,
        lipschitz,
    }
}

/// Affinity dimension from tables already built at depth `n_max`.
pub fn affinity_from_tables(
    tables: &LevelTables,
    pairs: &PairSample,
    tol: f64,
) -> DimensionEstimate {
    let curves = PressureCurves::new(tables, pairs);
    let depth = tables.depth();
    let grid = pressure_grid(&curves);
    let raw_root = bisect(|s| curves.raw(s), tol);
    let hi_root = bisect(|s| curves.upper(s), tol);
    let lo_root = bisect(|s| curves.lower(s), tol);

    let mut est = match raw_root {
        Some(v) => {
            let hi = hi_root.unwrap_or(f64::INFINITY);
            let lo = lo_root.unwrap_or(2.0);
            DimensionEstimate::new(v, lo, hi, depth, Method::PressureRoot)
        }
        None => DimensionEstimate::new(2.0, 2.0, f64::INFINITY, depth, Method::PressureRoot).with(
            "bound_only",
            "s >= 2: pressure has no sign change on [0, 2]",
        ),
    };
    let (ln_up, ln_lo) = pairs.log_constants(est.value);
    let residual = curves.raw(est.value).abs();
    est.insert("tol", tol);
    est.insert("letters", tables.alphabet);
    est.insert("words_at_depth", tables.level(depth).len());
    est.insert("pressure_at_0", grid.raw[0]);
    est.insert("pressure_at_2", *grid.raw.last().unwrap_or(&f64::NAN));
    est.insert("residual", residual);
    est.insert(
        "residual_within_lipschitz_tol",
        residual <= grid.lipschitz * tol,
    );
    est.insert("submult_constant", ln_up.exp());
    est.insert("supermult_constant", ln_lo.exp());
    est.insert("pair_samples", pairs.len());
    est.insert("brackets_heuristic", true);
    est.insert(
        "pressure_grid",
        json!({
            "s": grid.s,
            "raw": grid.raw,
            "strictly_decreasing": grid.strictly_decreasing,
            "convex": grid.convex,
            "min_second_difference": grid.min_second_difference,
            "convex_piecewise": grid.convex_piecewise,
            "min_second_difference_piecewise": grid.min_second_difference_piecewise,
            "lipschitz": grid.lipschitz,
        }),
    );
    est
}

/// Bisection on `s ∈ [0, 2]` for the zero of the raw pressure at depth
/// `n_max`, to within `tol`.
pub fn affinity_dimension(sys: &SystemSpec, tol: f64, n_max: usize) -> Result<DimensionEstimate> {
    if !(tol > 0.0) {
        return Err(Error::DomainError {
            value: tol,
            domain: "tol > 0",
        });
    }
    let class = sys.require_contracting_class()?;
    let tables = LevelTables::build(sys, n_max)?;
    let pairs = PairSample::draw(sys, n_max / 2, DEFAULT_PAIR_SAMPLES, PAIR_SEED)?;
    Ok(affinity_from_tables(&tables, &pairs, tol).with("contraction_class", class))
}
