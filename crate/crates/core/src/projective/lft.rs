//! Linear fractional transformations `φ_M(x) = (⟨r_i, x̃⟩ / ⟨r_m, x̃⟩)_i`.

use crate::error::{Error, Result};
use crate::linalg::Float3;

/// `φ_M(x)` for an `m × n` matrix given by its rows; `x` has `n - 1`
/// coordinates and `x̃` appends a 1.
pub fn lft_apply(rows: &[Vec<f64>], x: &[f64]) -> Result<Vec<f64>> {
    let m = rows.len();
    if m < 2 || rows.iter().any(|r| r.len() != x.len() + 1) {
        return Err(Error::DomainError {
            value: x.len() as f64,
            domain: "rows of length dim(x) + 1, at least two rows",
        });
    }
    let dot =
        |r: &Vec<f64>| r[..x.len()].iter().zip(x).map(|(a, b)| a * b).sum::<f64>() + r[x.len()];
    let den = dot(&rows[m - 1]);
    if den == 0.0 {
        return Err(Error::DenominatorZero);
    }
    Ok(rows[..m - 1].iter().map(|r| dot(r) / den).collect())
}

/// `φ_M` for a 3×3 matrix acting on the plane chart.
#[inline]
pub fn lft3(m: &Float3, x: [f64; 2]) -> Result<[f64; 2]> {
    let y: [f64; 3] = std::array::from_fn(|i| m[i][0] * x[0] + m[i][1] * x[1] + m[i][2]);
    if y[2] == 0.0 {
        return Err(Error::DenominatorZero);
    }
    Ok([y[0] / y[2], y[1] / y[2]])
}

/// Derivative of `φ_M` at `x`, as a 2×2 matrix.
pub fn lft3_jacobian(m: &Float3, x: [f64; 2]) -> Result<[[f64; 2]; 2]> {
    let y: [f64; 3] = std::array::from_fn(|i| m[i][0] * x[0] + m[i][1] * x[1] + m[i][2]);
    if y[2] == 0.0 {
        return Err(Error::DenominatorZero);
    }
    let d2 = y[2] * y[2];
    Ok(std::array::from_fn(|k| {
        std::array::from_fn(|j| (m[k][j] * y[2] - y[k] * m[2][j]) / d2)
    }))
}

/// Spectral norm of a 2×2 matrix.
pub fn norm2x2(j: &[[f64; 2]; 2]) -> f64 {
    let a = j[0][0] * j[0][0] + j[1][0] * j[1][0];
    let b = j[0][0] * j[0][1] + j[1][0] * j[1][1];
    let c = j[0][1] * j[0][1] + j[1][1] * j[1][1];
    let tr = a + c;
    let disc = ((a - c) * (a - c) + 4.0 * b * b).sqrt();
    (0.5 * (tr + disc)).max(0.0).sqrt()
}

/// The point of the plane chart `P` represented by a vector with `v₃ != 0`.
#[inline]
pub fn chart(v: [f64; 3]) -> [f64; 2] {
    [v[0] / v[2], v[1] / v[2]]
}

/// `x̃ = (x, 1)` rescaled onto the simplex `Σ v_i = 1`.
#[inline]
pub fn to_simplex(v: [f64; 3]) -> [f64; 3] {
    let s = v[0] + v[1] + v[2];
    [v[0] / s, v[1] / s, v[2] / s]
}
