//! Box-counting dimension of a point cloud.

use serde_json::json;

use crate::error::{Error, Result};
use crate::estimate::{DimensionEstimate, Method};
use crate::projective::PointCloud;

pub const MIN_SCALES: usize = 3;
/// A scale is sample-limited once more than this share of points sit in
/// distinct boxes.
pub const SATURATION: f64 = 0.1;

/// Occupied boxes of side `2⁻ⁿ`.
pub fn box_count(cloud: &PointCloud, n: u32) -> usize {
    let scale = 2f64.powi(n as i32);
    let mut keys: Vec<[i64; 3]> = cloud
        .iter()
        .map(|p| std::array::from_fn(|k| p.get(k).map_or(0, |x| (x * scale).floor() as i64)))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys.len()
}

/// Least-squares slope of `ln N(n)` against `n ln 2`, using resolutions up
/// to the first whose count exceeds a tenth of the cloud.
pub fn box_dimension_estimate(
    cloud: &PointCloud,
    resolutions: &[u32],
) -> Result<DimensionEstimate> {
    let mut res = resolutions.to_vec();
    res.sort_unstable();
    res.dedup();
    if res.len() < MIN_SCALES || cloud.is_empty() {
        return Err(Error::TooFewScales {
            needed: MIN_SCALES,
            found: if cloud.is_empty() { 0 } else { res.len() },
        });
    }
    let counts = crate::par::map_slice(&res, |&n| box_count(cloud, n));
    let limit = SATURATION * cloud.len() as f64;
    let used = counts.iter().take_while(|&&c| c as f64 <= limit).count();
    if used < MIN_SCALES {
        return Err(Error::TooFewScales {
            needed: MIN_SCALES,
            found: used,
        });
    }
    let xs: Vec<f64> = res[..used]
        .iter()
        .map(|&n| n as f64 * std::f64::consts::LN_2)
        .collect();
    let ys: Vec<f64> = counts[..used].iter().map(|&c| (c as f64).ln()).collect();
    let k = used as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residuals: Vec<f64> = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| y - intercept - slope * x)
        .collect();
    let rms = (residuals.iter().map(|r| r * r).sum::<f64>() / k).sqrt();
    let local: Vec<f64> = ys
        .windows(2)
        .zip(xs.windows(2))
        .map(|(y, x)| (y[1] - y[0]) / (x[1] - x[0]))
        .collect();
    let lo = local.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = local.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(
        DimensionEstimate::new(slope, lo, hi, res[used - 1] as usize, Method::BoxCount)
            .with("resolutions", &res)
            .with("counts", &counts)
            .with("used_scales", used)
            .with("intercept", intercept)
            .with("residual_rms", rms)
            .with("local_slopes", json!(local))
            .with("points", cloud.len()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::Coords;

    fn grid(side: usize) -> PointCloud {
        let pts: Vec<Vec<f64>> = (0..side * side)
            .map(|i| {
                vec![
                    ((i % side) as f64 + 0.5) / side as f64,
                    ((i / side) as f64 + 0.5) / side as f64,
                ]
            })
            .collect();
        PointCloud::from_points(Coords::PlaneP, &pts).unwrap()
    }

    #[test]
    fn single_point_has_slope_zero() {
        let cloud = PointCloud::from_points(Coords::PlaneP, &[vec![0.3, 0.7]]).unwrap();
        let e = box_dimension_estimate(&cloud, &[1, 2, 3, 4]);
        // one point already saturates every scale
        assert!(matches!(e, Err(Error::TooFewScales { .. })));
        let many = PointCloud::from_points(Coords::PlaneP, &vec![vec![0.3, 0.7]; 100]).unwrap();
        let e = box_dimension_estimate(&many, &[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(e.value, 0.0);
    }

    #[test]
    fn filled_square() {
        let e = box_dimension_estimate(&grid(512), &[1, 2, 3, 4, 5, 6, 7]).unwrap();
        assert!((e.value - 2.0).abs() <= 0.05, "{}", e.value);
    }

    #[test]
    fn counts_are_monotone_and_nested() {
        let big = grid(64);
        let small = PointCloud::from_points(
            Coords::PlaneP,
            &big.iter()
                .step_by(7)
                .map(|p| p.to_vec())
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let mut last = 0;
        for n in 0..9 {
            let c = box_count(&big, n);
            assert!(c >= last);
            assert!(box_count(&small, n) <= c);
            last = c;
        }
    }

    #[test]
    fn too_few_resolutions() {
        assert!(matches!(
            box_dimension_estimate(&grid(8), &[1, 2]),
            Err(Error::TooFewScales {
                needed: 3,
                found: 2
            })
        ));
    }
}
