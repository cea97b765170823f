//! Truncated zeta series with pruning and loss accounting.

use serde::Serialize;

use super::estimate::{PairSample, DEFAULT_PAIR_SAMPLES, PAIR_SEED};
use crate::error::{Error, Result};
use crate::linalg::singular_values;
use crate::semigroup::words::{node_cap, walk_subtree, Descend};
use crate::semigroup::SystemSpec;

/// Subtrees are cut once their bound falls below this share of the running total.
pub const PRUNE_RELATIVE: f64 = 1e-15;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZetaResult {
    pub value: f64,
    /// Upper bound on the mass removed by pruning.
    pub pruning_loss: f64,
    pub nodes: u64,
    pub pruned_subtrees: u64,
}

/// `Σ_{n=1}^{n_max} Σ_{𝔄ⁿ} φˢ(A)`, summed depth-first in lexicographic order.
///
/// Below a word `w` of length `d` the remaining mass is bounded by
/// `φˢ(w) Σ_{j=1}^{n_max-d} (C·Z₁)^j` with `Z₁ = Σ_i φˢ(A_i)` and `C` the
/// sampled almost-submultiplicativity constant.
pub fn zeta_truncated(sys: &SystemSpec, s: f64, n_max: usize) -> Result<ZetaResult> {
    if !(s >= 0.0) || !s.is_finite() {
        return Err(Error::DomainError {
            value: s,
            domain: "s >= 0",
        });
    }
    if n_max == 0 {
        return Ok(ZetaResult {
            value: 0.0,
            pruning_loss: 0.0,
            nodes: 0,
            pruned_subtrees: 0,
        });
    }
    let pairs = PairSample::draw(sys, 1, DEFAULT_PAIR_SAMPLES, PAIR_SEED)?;
    let c = pairs.log_constants(s).0.exp();
    let z1: f64 = sys
        .letters()
        .iter()
        .map(|a| singular_values(a).map(|sv| sv.log_ratios().log_svf_unchecked(s).exp()))
        .sum::<Result<f64>>()?;
    let q = c * z1;
    // tail[r] = Σ_{j=1}^{r} q^j
    let mut tail = vec![0.0f64; n_max + 1];
    for r in 1..=n_max {
        tail[r] = tail[r - 1] + q.powi(r as i32);
    }

    let cap = node_cap();
    let mut total = 0.0f64;
    let mut comp = 0.0f64;
    let mut loss = 0.0f64;
    let mut nodes = 0u64;
    let mut pruned = 0u64;
    for root in 0..sys.len() {
        walk_subtree(sys, root, n_max, &mut |path, prod| {
            nodes += 1;
            if nodes > cap {
                return Err(Error::BudgetExceeded {
                    requested: nodes as u128,
                    cap,
                });
            }
            let phi = singular_values(prod)?
                .log_ratios()
                .log_svf_unchecked(s)
                .exp();
            let y = phi - comp;
            let t = total + y;
            comp = (t - total) - y;
            total = t;
            let bound = phi * tail[n_max - path.len()];
            if path.len() < n_max && bound < PRUNE_RELATIVE * total {
                loss += bound;
                pruned += 1;
                return Ok(Descend::No);
            }
            Ok(Descend::Yes)
        })?;
    }
    Ok(ZetaResult {
        value: total,
        pruning_loss: loss,
        nodes,
        pruned_subtrees: pruned,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, Matrix3};
    use crate::semigroup::rauzy_system;

    #[test]
    fn geometric_singleton() {
        let d = Matrix3::diagonal([rat(9, 1), rat(1, 1), rat(1, 9)]);
        let sys = SystemSpec::uniform("d", vec![d], None).unwrap();
        for n in [1usize, 5, 12] {
            let z = zeta_truncated(&sys, 1.0, n).unwrap();
            let exact = (1.0 - 9f64.powi(-(n as i32))) / 8.0;
            assert!(
                (z.value - exact).abs() <= 1e-14 + z.pruning_loss,
                "{} vs {exact}",
                z.value
            );
        }
    }

    #[test]
    fn zero_exponent_counts() {
        let z = zeta_truncated(&rauzy_system(), 0.0, 6).unwrap();
        assert_eq!(z.value, (1..=6).map(|k| 3f64.powi(k)).sum::<f64>());
        assert_eq!(z.pruning_loss, 0.0);
    }
}
