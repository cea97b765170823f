//! Rescaling `φ_{BA} = c·φ_M + t` of a projected cylinder back to a frame,
//! and the partition `Ξ_n` defined by the scaling ratio.

use serde::Serialize;

use super::frame::{canonical_sign, dot, norm, scaled, sub, PlaneFrame};
use crate::error::{Error, Result};
use crate::linalg::{float_svd, singular_values, Matrix3};
use crate::semigroup::partition::{first_passage, DEFAULT_DEPTH_CAP};
use crate::semigroup::{SystemSpec, Word};

/// Relative gap `(α₂ - α₃)/α₂` below which the decomposition is refused.
pub const GAP_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Rescale {
    /// The new frame `M`, orthonormal.
    pub m: PlaneFrame,
    pub c: f64,
    pub t: f64,
    /// Unit vector `u ∈ V_B` with `A*u ⟂ A*r2`.
    pub u: [f64; 3],
    /// Scaling ratio `c / √(1+t²)` used to stop `Ξ_n`.
    pub ratio: f64,
}

fn apply_transpose(a: &[[f64; 3]; 3], v: [f64; 3]) -> [f64; 3] {
    std::array::from_fn(|j| (0..3).map(|i| a[i][j] * v[i]).sum())
}

/// Decomposes `B·A` for an orthonormal frame `B` and a positive matrix `A`.
pub fn rescale_decompose(b: &PlaneFrame, a: &Matrix3) -> Result<Rescale> {
    if !b.is_orthonormal() {
        return Err(Error::BadDirection(
            "rescaling needs an orthonormal frame".into(),
        ));
    }
    if !a.all_positive() {
        return Err(Error::NotPositive(
            "rescaling needs a positive matrix".into(),
        ));
    }
    let sv = singular_values(a)?;
    if (sv.a2 - sv.a3) <= GAP_TOL * sv.a2 {
        return Err(Error::DegenerateGap {
            a2: sv.a2,
            a3: sv.a3,
        });
    }
    let f = a.f();
    let a1 = apply_transpose(f, b.r1());
    let a2 = apply_transpose(f, b.r2());
    let n2 = norm(a2);
    let t = dot(a1, a2) / (n2 * n2);
    let v = sub(a1, scaled(a2, t));
    let nv = norm(v);
    let u = canonical_sign(scaled(
        sub(b.r1(), scaled(b.r2(), t)),
        1.0 / (1.0 + t * t).sqrt(),
    ));
    let m = PlaneFrame::new(scaled(v, 1.0 / nv), scaled(a2, 1.0 / n2))?;
    let c = nv / n2;
    Ok(Rescale {
        m,
        c,
        t,
        u,
        ratio: c / (1.0 + t * t).sqrt(),
    })
}

/// Rigorous two-sided bound on the scale `c` of [`rescale_decompose`]:
/// `sin θ · α₂/α₁ <= c <= (α₁/‖A*r2‖)² · α₂/α₁`, where `θ` is the angle
/// between the least expanded direction of `A` and the plane of `B`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScaleBounds {
    pub lower: f64,
    pub upper: f64,
    pub sin_theta: f64,
    pub gap: f64,
}

pub fn scale_bounds(b: &PlaneFrame, a: &Matrix3) -> Result<ScaleBounds> {
    let svd = float_svd(a)?;
    let [s1, s2, _] = svd.sigma;
    let l3 = [svd.left[0][2], svd.left[1][2], svd.left[2][2]];
    let sin_theta = dot(l3, b.normal()).abs().min(1.0);
    let a2 = norm(apply_transpose(a.f(), b.r2()));
    let gap = s2 / s1;
    Ok(ScaleBounds {
        lower: sin_theta * gap,
        upper: (s1 / a2).powi(2) * gap,
        sin_theta,
        gap,
    })
}

/// `Ξ_n(B)`: first passage of the scaling ratio below `2⁻ⁿ`.
pub fn xi_partition(b: &PlaneFrame, sys: &SystemSpec, n: u32) -> Result<Vec<Word>> {
    if sys.contraction_class() != crate::semigroup::ContractionClass::Positive {
        return Err(Error::NotPositive(format!(
            "'{}' has a nonpositive letter",
            sys.label()
        )));
    }
    let threshold = (-(n as f64) * std::f64::consts::LN_2).exp();
    first_passage(sys, DEFAULT_DEPTH_CAP, |_, prod| {
        Ok(rescale_decompose(b, prod)?.ratio <= threshold)
    })
}
