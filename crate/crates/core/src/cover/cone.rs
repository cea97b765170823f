//! Measured distortion constant of the orthogonal factors `A = V D U`.

use crate::error::{Error, Result};
use crate::linalg::{float_svd, Float3, Matrix3};
use crate::projective::lft::{lft3, lft3_jacobian, norm2x2};
use crate::semigroup::{ContractionClass, SystemSpec};

/// Words of length at most this enter the sampled maximization.
pub const CONE_WORD_DEPTH: usize = 2;
const MAX_CONE_WORDS: usize = 4096;
const GRID: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];

/// `(V, D, U)` with `D = diag(α₂, α₃, α₁)`, so that `φ_D` is the diagonal
/// contraction `(x, y) ↦ (α₂x/α₁, α₃y/α₁)` of the plane chart.
pub struct ChartSvd {
    pub v: Float3,
    pub d: [f64; 3],
    pub u: Float3,
}

pub fn chart_svd(a: &Matrix3) -> Result<ChartSvd> {
    let svd = float_svd(a)?;
    let col = |m: &Float3, k: usize| [m[0][k], m[1][k], m[2][k]];
    let (mut r, mut l): (Vec<[f64; 3]>, Vec<[f64; 3]>) = (0..3)
        .map(|k| (col(&svd.right, k), col(&svd.left, k)))
        .unzip();
    // pairs may flip together; orient the top pair into the positive cone
    if r[0].iter().sum::<f64>() < 0.0 {
        r[0] = r[0].map(|x| -x);
        l[0] = l[0].map(|x| -x);
    }
    let order = [1, 2, 0];
    let u = std::array::from_fn(|i| r[order[i]]);
    let v = std::array::from_fn(|i| std::array::from_fn(|j| l[order[j]][i]));
    let [s1, s2, s3] = svd.sigma;
    Ok(ChartSvd {
        v,
        d: [s2, s3, s1],
        u,
    })
}

/// Probe points of the chart. For positive systems these are the letter
/// columns, which span a cone containing the attractor, and their centroid;
/// diagonal systems use a fixed log-spaced grid.
pub fn probe_points(sys: &SystemSpec) -> Vec<[f64; 2]> {
    if sys.contraction_class() != ContractionClass::Positive {
        return GRID
            .iter()
            .flat_map(|&x| GRID.iter().map(move |&y| [x, y]))
            .collect();
    }
    let cols: Vec<[f64; 3]> = sys
        .letters()
        .iter()
        .flat_map(|a| {
            let f = *a.f();
            (0..3).map(move |j| {
                let v = [f[0][j], f[1][j], f[2][j]];
                let s = v[0] + v[1] + v[2];
                v.map(|x| x / s)
            })
        })
        .collect();
    let k = cols.len() as f64;
    let centre: [f64; 3] = std::array::from_fn(|i| cols.iter().map(|c| c[i]).sum::<f64>() / k);
    let mut pts: Vec<[f64; 2]> = cols.iter().map(|c| [c[0] / c[2], c[1] / c[2]]).collect();
    pts.push([centre[0] / centre[2], centre[1] / centre[2]]);
    pts
}

fn words_up_to(sys: &SystemSpec, depth: usize) -> Vec<Matrix3> {
    let letters = sys.letters();
    let mut all: Vec<Matrix3> = letters.to_vec();
    let mut frontier = all.clone();
    for _ in 1..depth {
        let next: Vec<Matrix3> = frontier
            .iter()
            .flat_map(|m| letters.iter().map(move |a| m.mul(a)))
            .take(MAX_CONE_WORDS)
            .collect();
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

fn check_class(sys: &SystemSpec) -> Result<()> {
    match sys.contraction_class() {
        ContractionClass::Neither => Err(Error::NotPositive(format!(
            "'{}' is neither positive nor diagonal",
            sys.label()
        ))),
        _ => Ok(()),
    }
}

/// `max(1, sup ‖Dφ_U‖, sup ‖Dφ_V‖)` over probe points and words of length
/// at most [`CONE_WORD_DEPTH`]. `φ_V` is probed at `φ_D(φ_U(x))`.
pub fn cone_constant(sys: &SystemSpec) -> Result<f64> {
    check_class(sys)?;
    let probes = probe_points(sys);
    let words = words_up_to(sys, CONE_WORD_DEPTH);
    let per_word = crate::par::map_slice(&words, |a| -> Result<f64> {
        let svd = chart_svd(a)?;
        let mut c = 1.0f64;
        for &x in &probes {
            let Ok(ju) = lft3_jacobian(&svd.u, x) else {
                continue;
            };
            let ux = lft3(&svd.u, x)?;
            let y = [ux[0] * svd.d[0] / svd.d[2], ux[1] * svd.d[1] / svd.d[2]];
            let Ok(jv) = lft3_jacobian(&svd.v, y) else {
                continue;
            };
            c = c.max(norm2x2(&ju)).max(norm2x2(&jv));
        }
        Ok(c)
    });
    per_word
        .into_iter()
        .try_fold(1.0f64, |acc, c| Ok(acc.max(c?)))
}

/// Radius about the centroid of the letter images of the probe points.
pub fn base_radius(sys: &SystemSpec) -> Result<f64> {
    check_class(sys)?;
    let probes = probe_points(sys);
    let mut imgs = Vec::new();
    for a in sys.letters() {
        for &x in &probes {
            if let Ok(y) = lft3(a.f(), x) {
                imgs.push(y);
            }
        }
    }
    let k = imgs.len() as f64;
    let cx = imgs.iter().map(|p| p[0]).sum::<f64>() / k;
    let cy = imgs.iter().map(|p| p[1]).sum::<f64>() / k;
    Ok(imgs
        .iter()
        .map(|p| ((p[0] - cx).powi(2) + (p[1] - cy).powi(2)).sqrt())
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::semigroup::rauzy::{default_epsilon, rauzy_gamma_system};

    #[test]
    fn chart_svd_reconstructs() {
        let sys = rauzy_gamma_system(2, &default_epsilon()).unwrap();
        for a in sys.letters().iter().take(5) {
            let s = chart_svd(a).unwrap();
            let f = a.f();
            for i in 0..3 {
                for j in 0..3 {
                    let x: f64 = (0..3).map(|k| s.v[i][k] * s.d[k] * s.u[k][j]).sum();
                    assert!((x - f[i][j]).abs() < 1e-9 * f[i][j].abs().max(1.0));
                }
            }
            for x in [[0.5, 0.5], [2.0, 1.0]] {
                let direct = lft3(f, x).unwrap();
                let ux = lft3(&s.u, x).unwrap();
                let y = [ux[0] * s.d[0] / s.d[2], ux[1] * s.d[1] / s.d[2]];
                let split = lft3(&s.v, y).unwrap();
                assert!((direct[0] - split[0]).abs() < 1e-9 && (direct[1] - split[1]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn rotationless_diagonal_has_unit_constant() {
        let d = Matrix3::diagonal([rat(1, 1), rat(1, 9), rat(9, 1)]);
        let sys = SystemSpec::uniform("d", vec![d.clone(), d], None).unwrap();
        assert!((cone_constant(&sys).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn never_below_one() {
        let sys = rauzy_gamma_system(1, &default_epsilon()).unwrap();
        let c = cone_constant(&sys).unwrap();
        assert!(c >= 1.0 && c.is_finite());
    }

    #[test]
    fn rejects_rauzy_letters() {
        assert!(matches!(
            cone_constant(&crate::semigroup::rauzy_system()),
            Err(Error::NotPositive(_))
        ));
    }
}
