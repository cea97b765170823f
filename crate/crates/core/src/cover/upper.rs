//! Covering upper bound for the Hausdorff `s`-measure from singular values.

use serde::Serialize;

use super::cone::{base_radius, cone_constant};
use crate::error::{Error, Result};
use crate::linalg::singular_values;
use crate::semigroup::partition::{first_passage, DEFAULT_DEPTH_CAP};
use crate::semigroup::{ContractionClass, SystemSpec};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoverReport {
    pub s: f64,
    pub delta: f64,
    pub word_count: usize,
    pub cover_cost: f64,
    /// The cost without the prefactor `C^{2s} r^s`; nonincreasing in `s`
    /// on a fixed family.
    pub svf_sum: f64,
    pub cone_constant: f64,
    /// Radius `r(B)` of the base ball.
    pub radius: f64,
    /// Total balls, `ceil(α₂/α₃) + 1` per ellipse.
    pub ball_count: f64,
    pub max_word_len: usize,
    /// `C` is measured, so the certificate is heuristic.
    pub heuristic: bool,
}

/// Cost `Σ C^{2s} (α₂/α₁)(α₃/α₁)^{s-1} r^s` over the first passage of
/// `α₃/α₁ <= δ` (for `s >= 1`), or `Σ C^{2s} (α₂/α₁)^s r^s` over the first
/// passage of `α₂/α₁ <= δ` (for `s < 1`).
pub fn svd_cover_upper(sys: &SystemSpec, s: f64, delta: f64) -> Result<CoverReport> {
    if sys.contraction_class() == ContractionClass::Neither {
        return Err(Error::NotPositive(format!(
            "'{}' is neither positive nor diagonal",
            sys.label()
        )));
    }
    if !(s > 0.0 && s <= 2.0) {
        return Err(Error::DomainError {
            value: s,
            domain: "0 < s <= 2",
        });
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::DomainError {
            value: delta,
            domain: "0 < delta < 1",
        });
    }
    let c = cone_constant(sys)?;
    let r = base_radius(sys)?;
    let high = s >= 1.0;
    let words = first_passage(sys, DEFAULT_DEPTH_CAP, |_, prod| {
        let sv = singular_values(prod)?;
        Ok(if high { sv.a3 / sv.a1 } else { sv.a2 / sv.a1 } <= delta)
    })?;
    let log_pref = 2.0 * s * c.ln() + s * r.ln();
    let terms = crate::par::map_slice(&words, |w| -> Result<(f64, f64, f64)> {
        let sv = singular_values(&w.product)?;
        let lr = sv.log_ratios();
        let log_phi = if high {
            lr.l2 + (s - 1.0) * lr.l3
        } else {
            s * lr.l2
        };
        Ok((
            (log_pref + log_phi).exp(),
            log_phi.exp(),
            (sv.a2 / sv.a3).ceil() + 1.0,
        ))
    });
    let (mut cost, mut svf_sum, mut balls) = (0.0f64, 0.0f64, 0.0f64);
    for t in terms {
        let (x, y, b) = t?;
        cost += x;
        svf_sum += y;
        balls += b;
    }
    Ok(CoverReport {
        s,
        delta,
        word_count: words.len(),
        cover_cost: cost,
        svf_sum,
        cone_constant: c,
        radius: r,
        ball_count: balls,
        max_word_len: words.iter().map(|w| w.letters.len()).max().unwrap_or(0),
        heuristic: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, Matrix3};

    fn diag_singleton() -> SystemSpec {
        SystemSpec::uniform(
            "d",
            vec![Matrix3::diagonal([rat(1, 1), rat(1, 9), rat(9, 1)])],
            None,
        )
        .unwrap()
    }

    #[test]
    fn singleton_cost_vanishes() {
        let sys = diag_singleton();
        for s in [0.5, 1.0, 1.5] {
            let costs: Vec<f64> = [1e-2, 1e-4, 1e-8]
                .iter()
                .map(|&d| svd_cover_upper(&sys, s, d).unwrap().cover_cost)
                .collect();
            assert!(costs.windows(2).all(|w| w[1] < w[0]), "{costs:?}");
            assert_eq!(svd_cover_upper(&sys, s, 1e-4).unwrap().word_count, 1);
        }
    }

    #[test]
    fn domain_checks() {
        let sys = diag_singleton();
        assert!(svd_cover_upper(&sys, 0.0, 0.1).is_err());
        assert!(svd_cover_upper(&sys, 1.0, 1.0).is_err());
        assert!(matches!(
            svd_cover_upper(&crate::semigroup::rauzy_system(), 1.0, 0.1),
            Err(Error::NotPositive(_))
        ));
    }
}
