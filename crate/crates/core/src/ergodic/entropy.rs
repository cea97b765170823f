//! Shannon entropy of a probability vector and plug-in dyadic entropies.

use crate::error::{Error, Result};

/// Tolerance on `Σ p_i = 1`.
pub const SUM_TOL: f64 = 1e-12;

/// `-Σ p_i ln p_i` in nats.
pub fn shannon_entropy(p: &[f64]) -> Result<f64> {
    if p.is_empty() {
        return Err(Error::BadVector("empty".into()));
    }
    if let Some(x) = p.iter().find(|x| !(**x > 0.0) || !x.is_finite()) {
        return Err(Error::BadVector(format!("entry {x} is not positive")));
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > SUM_TOL {
        return Err(Error::BadVector(format!("entries sum to {sum}")));
    }
    Ok(-p.iter().map(|x| x * x.ln()).sum::<f64>())
}

/// Entropy of the empirical distribution of `samples` over the dyadic
/// cells `[k 2⁻ⁿ, (k+1) 2⁻ⁿ)`. Returns 0 for an empty slice.
pub fn dyadic_entropy(samples: &[f64], n: u32) -> f64 {
    if samples.is_empty() {
        return 0.0;
    }
    let scale = 2f64.powi(n as i32);
    let mut cells: Vec<i64> = samples.iter().map(|x| (x * scale).floor() as i64).collect();
    cells.sort_unstable();
    let total = samples.len() as f64;
    let mut h = 0.0;
    let mut run = 1usize;
    for i in 1..=cells.len() {
        if i < cells.len() && cells[i] == cells[i - 1] {
            run += 1;
        } else {
            let q = run as f64 / total;
            h -= q * q.ln();
            run = 1;
        }
    }
    h.max(0.0)
}

/// Number of occupied dyadic cells.
pub fn occupied_cells(samples: &[f64], n: u32) -> usize {
    let scale = 2f64.powi(n as i32);
    let mut cells: Vec<i64> = samples.iter().map(|x| (x * scale).floor() as i64).collect();
    cells.sort_unstable();
    cells.dedup();
    cells.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn shannon_examples() {
        assert_eq!(shannon_entropy(&[1.0]).unwrap(), 0.0);
        let t = 1.0 / 3.0;
        assert!((shannon_entropy(&[t, t, t]).unwrap() - 3f64.ln()).abs() < 1e-15);
        assert!((shannon_entropy(&[0.5, 0.25, 0.25]).unwrap() - 1.5 * 2f64.ln()).abs() < 1e-15);
        assert!(matches!(
            shannon_entropy(&[0.5, 0.6]),
            Err(Error::BadVector(_))
        ));
        assert!(matches!(
            shannon_entropy(&[1.0, 0.0]),
            Err(Error::BadVector(_))
        ));
    }

    #[test]
    fn dyadic_examples() {
        assert_eq!(dyadic_entropy(&[0.3; 100], 10), 0.0);
        let n = 6;
        let grid: Vec<f64> = (0..1 << n).flat_map(|k| [k as f64 / 64.0; 3]).collect();
        assert!((dyadic_entropy(&grid, n) - n as f64 * 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn uniform_samples_at_resolution_eight() {
        let mut rng = crate::rng::stream(11, 0);
        let xs: Vec<f64> = (0..1_000_000).map(|_| rng.random::<f64>()).collect();
        assert!((dyadic_entropy(&xs, 8) - 8.0 * 2f64.ln()).abs() <= 0.01);
    }

    #[test]
    fn dyadic_scaling_is_exact() {
        let mut rng = crate::rng::stream(2, 0);
        let xs: Vec<f64> = (0..5000).map(|_| rng.random::<f64>() * 3.0 - 1.0).collect();
        for k in 1..5 {
            let ys: Vec<f64> = xs.iter().map(|x| x * 2f64.powi(k)).collect();
            for n in 0..8u32 {
                assert_eq!(dyadic_entropy(&ys, n), dyadic_entropy(&xs, n + k as u32));
            }
        }
    }

    #[test]
    fn bounded_by_cell_count() {
        let mut rng = crate::rng::stream(3, 0);
        let xs: Vec<f64> = (0..777).map(|_| rng.random::<f64>().powi(3)).collect();
        for n in 0..12 {
            let h = dyadic_entropy(&xs, n);
            let cells = occupied_cells(&xs, n) as f64;
            assert!(h <= cells.ln() + 1e-12);
            assert!(cells.ln() <= (xs.len() as f64).ln().min(n as f64 * 2f64.ln() + 1.0) + 1e-12);
        }
    }
}
