//! Singular values, the singular value function and operator norms.

use num::rational::BigRational;
use num::{Signed, Zero};
use serde::Serialize;

use super::jacobi::{gram, symmetric_eigen};
use super::matrix::{Float3, Matrix3};
use crate::error::{Error, Result};

const PRECISION_WARN: f64 = 1e12;

/// Singular values sorted `a1 >= a2 >= a3 >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SvTriple {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl SvTriple {
    pub fn new(mut v: [f64; 3]) -> Self {
        v.sort_by(|a, b| b.total_cmp(a));
        SvTriple {
            a1: v[0],
            a2: v[1],
            a3: v[2],
        }
    }

    pub fn product(&self) -> f64 {
        self.a1 * self.a2 * self.a3
    }

    /// `(ln a2/a1, ln a3/a1)`, the only data the singular value function needs.
    pub fn log_ratios(&self) -> LogRatios {
        LogRatios {
            l2: (self.a2 / self.a1).ln(),
            l3: (self.a3 / self.a1).ln(),
        }
    }

    pub fn svf(&self, s: f64) -> Result<f64> {
        Ok(self.log_ratios().log_svf(s)?.exp())
    }
}

/// Logarithms of the projective contraction ratios `a2/a1` and `a3/a1`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct LogRatios {
    pub l2: f64,
    pub l3: f64,
}

impl LogRatios {
    /// `ln φˢ`.
    ///
    /// Piecewise linear in `s`:
    /// `s·l2` on `[0,1]`, `l2 + (s-1)·l3` on `[1,2]`, `(s/2)(l2+l3)` beyond.
    pub fn log_svf(&self, s: f64) -> Result<f64> {
        if !(s >= 0.0) || !s.is_finite() {
            return Err(Error::DomainError {
                value: s,
                domain: "s >= 0",
            });
        }
        Ok(self.log_svf_unchecked(s))
    }

    #[inline]
    pub fn log_svf_unchecked(&self, s: f64) -> f64 {
        if s <= 1.0 {
            s * self.l2
        } else if s <= 2.0 {
            self.l2 + (s - 1.0) * self.l3
        } else {
            0.5 * s * (self.l2 + self.l3)
        }
    }

    pub fn add(&self, other: &LogRatios) -> LogRatios {
        LogRatios {
            l2: self.l2 + other.l2,
            l3: self.l3 + other.l3,
        }
    }
}

fn abs_det_f64(a: &Matrix3) -> Result<f64> {
    if a.is_unimodular() {
        return Ok(1.0);
    }
    let d = a.det();
    if d.is_zero() {
        return Err(Error::SingularInput);
    }
    Ok(super::matrix::ratio_to_f64(&d.numer().abs(), d.denom()))
}

fn top_singular(m: &Float3) -> f64 {
    symmetric_eigen(&gram(m)).values[0].max(0.0).sqrt()
}

/// Singular values of a nonsingular matrix.
///
/// `a1` and `a1·a2` are the spectral norms of `A` and of its exterior square
/// (formed exactly, then rounded); `a3` follows from the exact determinant.
/// This keeps the smallest value accurate when the matrix is badly conditioned.
pub fn singular_values(a: &Matrix3) -> Result<SvTriple> {
    let det = abs_det_f64(a)?;
    let a1 = top_singular(a.f());
    let a12 = top_singular(a.exterior_square().f());
    let sv = SvTriple::new([a1, a12 / a1, det / a12]);
    if sv.a1 / sv.a3 > PRECISION_WARN {
        log::warn!(
            "precision loss: condition number {:.3e} exceeds {:.0e}",
            sv.a1 / sv.a3,
            PRECISION_WARN
        );
    }
    Ok(sv)
}

/// `φˢ(A)`.
pub fn svf(a: &Matrix3, s: f64) -> Result<f64> {
    singular_values(a)?.svf(s)
}

/// Largest eigenvalue of a symmetric 3×3 matrix by the trigonometric closed form.
fn closed_form_top_eigen(s: &Float3) -> f64 {
    let p1 = s[0][1] * s[0][1] + s[0][2] * s[0][2] + s[1][2] * s[1][2];
    let q = (s[0][0] + s[1][1] + s[2][2]) / 3.0;
    if p1 == 0.0 {
        return s[0][0].max(s[1][1]).max(s[2][2]);
    }
    let p2 = (s[0][0] - q).powi(2) + (s[1][1] - q).powi(2) + (s[2][2] - q).powi(2) + 2.0 * p1;
    let p = (p2 / 6.0).sqrt();
    let b: Float3 = std::array::from_fn(|i| {
        std::array::from_fn(|j| (s[i][j] - if i == j { q } else { 0.0 }) / p)
    });
    let det_b = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1])
        - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
        + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    let r = (det_b / 2.0).clamp(-1.0, 1.0);
    q + 2.0 * p * (r.acos() / 3.0).cos()
}

fn float_minors(a: &Float3) -> Float3 {
    const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];
    std::array::from_fn(|r| {
        let (i0, i1) = PAIRS[r];
        std::array::from_fn(|c| {
            let (j0, j1) = PAIRS[c];
            a[i0][j0] * a[i1][j1] - a[i0][j1] * a[i1][j0]
        })
    })
}

/// `φˢ(A)` from the operator norms of `A` and `A∧2` alone, for `s ∈ [0, 2]`.
///
/// Shares no code with [`singular_values`]: the norms come from the
/// closed-form top eigenvalue and the minors are taken in floating point.
pub fn svf_via_norms(a: &Matrix3, s: f64) -> Result<f64> {
    if !(0.0..=2.0).contains(&s) {
        return Err(Error::DomainError {
            value: s,
            domain: "[0, 2]",
        });
    }
    if a.det().is_zero() {
        return Err(Error::SingularInput);
    }
    let f = a.f();
    let n1 = closed_form_top_eigen(&gram(f)).sqrt();
    let n2 = closed_form_top_eigen(&gram(&float_minors(f))).sqrt();
    Ok(if s <= 1.0 {
        (n2 / (n1 * n1)).powf(s)
    } else {
        n2.powf(2.0 - s) / n1.powf(1.0 + s)
    })
}

/// Spectral norm `‖A‖₂`.
pub fn operator_norm(a: &Matrix3) -> f64 {
    top_singular(a.f())
}

/// Exact Frobenius bracket `‖A‖_F/√3 <= ‖A‖₂ <= ‖A‖_F`, held as `‖A‖_F²`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormBracket {
    pub frobenius_sq: BigRational,
}

impl NormBracket {
    pub fn of(a: &Matrix3) -> Self {
        NormBracket {
            frobenius_sq: a.frobenius_sq(),
        }
    }

    /// Exact test of `F²/3 <= x² <= F²`.
    pub fn contains(&self, x: f64) -> bool {
        let Some(x) = BigRational::from_float(x) else {
            return false;
        };
        let x2 = &x * &x;
        let three = BigRational::from_integer(3.into());
        x2 >= &self.frobenius_sq / three && x2 <= self.frobenius_sq
    }

    pub fn bounds(&self) -> (f64, f64) {
        let f = super::matrix::ratio_to_f64(self.frobenius_sq.numer(), self.frobenius_sq.denom())
            .sqrt();
        (f / 3f64.sqrt(), f)
    }
}

/// Full SVD `A = L · diag(a1, a2, a3) · Rᵀ` in floating point; columns of
/// `left`/`right` are the singular directions in descending order.
#[derive(Clone, Copy, Debug)]
pub struct FloatSvd {
    pub left: Float3,
    pub sigma: [f64; 3],
    pub right: Float3,
}

fn cross(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

fn column(m: &Float3, k: usize) -> [f64; 3] {
    [m[0][k], m[1][k], m[2][k]]
}

fn normalize(v: [f64; 3]) -> [f64; 3] {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    v.map(|x| x / n)
}

pub fn float_svd(a: &Matrix3) -> Result<FloatSvd> {
    let sv = singular_values(a)?;
    let f = a.f();
    let eig = symmetric_eigen(&gram(f));
    let r0 = column(&eig.vectors, 0);
    let r1 = column(&eig.vectors, 1);
    let r2 = cross(r0, r1);
    let apply =
        |v: [f64; 3]| std::array::from_fn::<f64, 3, _>(|i| (0..3).map(|k| f[i][k] * v[k]).sum());
    let l0 = normalize(apply(r0));
    let l1 = normalize(apply(r1));
    let mut l2 = cross(l0, l1);
    if (0..3).map(|i| l2[i] * apply(r2)[i]).sum::<f64>() < 0.0 {
        l2 = l2.map(|x| -x);
    }
    let left = std::array::from_fn(|i| [l0[i], l1[i], l2[i]]);
    let right = std::array::from_fn(|i| [r0[i], r1[i], r2[i]]);
    Ok(FloatSvd {
        left,
        sigma: [sv.a1, sv.a2, sv.a3],
        right,
    })
}
