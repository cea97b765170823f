//! Monte-Carlo Lyapunov exponents and the Lyapunov dimension.

use nalgebra::Matrix3 as NMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::par;
use crate::rng::{stream, LetterSampler};
use crate::semigroup::SystemSpec;

pub const CHAINS: usize = 32;
/// Steps between QR renormalizations.
pub const RENORM_EVERY: usize = 20;
/// Renormalize sooner once an entry exceeds this, so that the smaller
/// directions are not swamped before the next QR.
pub const RENORM_ENTRY: f64 = 64.0;
pub const MIN_STEPS: usize = 1000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LyapunovStats {
    pub chi: [f64; 3],
    pub stderr: [f64; 3],
    pub steps: usize,
    pub seed: u64,
}

impl LyapunovStats {
    pub fn sum(&self) -> f64 {
        self.chi.iter().sum()
    }

    pub fn stderr_sum(&self) -> f64 {
        self.stderr.iter().sum()
    }
}

fn chain(
    letters: &[NMatrix<f64>],
    sampler: &LetterSampler,
    steps: usize,
    seed: u64,
    index: u64,
) -> [f64; 3] {
    let mut rng = stream(seed, index);
    let mut q = NMatrix::<f64>::identity();
    let mut acc = [0.0f64; 3];
    let mut since = 0;
    let renorm = |q: &mut NMatrix<f64>, acc: &mut [f64; 3]| {
        let qr = q.qr();
        let r = qr.r();
        for k in 0..3 {
            acc[k] += r[(k, k)].abs().ln();
        }
        *q = qr.q();
    };
    for step in 0..steps {
        let i = sampler.sample(&mut rng);
        q = letters[i] * q;
        since += 1;
        if since == RENORM_EVERY || step + 1 == steps || q.amax() > RENORM_ENTRY {
            renorm(&mut q, &mut acc);
            since = 0;
        }
    }
    acc.map(|x| x / steps as f64)
}

/// Exponents of `A_{i_n}* ··· A_{i_1}*` along `p`-random letters, averaged
/// over independent chains keyed by `(seed, chain)`.
pub fn lyapunov_exponents(sys: &SystemSpec, steps: usize, seed: u64) -> Result<LyapunovStats> {
    if steps < MIN_STEPS {
        return Err(Error::DomainError {
            value: steps as f64,
            domain: "steps >= 1000",
        });
    }
    let sampler = LetterSampler::new(sys.probabilities_f64())?;
    let letters: Vec<NMatrix<f64>> = sys
        .letters()
        .iter()
        .map(|a| {
            let f = a.f();
            NMatrix::from_fn(|i, j| f[j][i])
        })
        .collect();
    let runs = par::map_indexed(CHAINS, |c| chain(&letters, &sampler, steps, seed, c as u64));
    let m = CHAINS as f64;
    let mut chi = [0.0; 3];
    let mut stderr = [0.0; 3];
    for k in 0..3 {
        let mean = runs.iter().map(|r| r[k]).sum::<f64>() / m;
        let var = runs.iter().map(|r| (r[k] - mean).powi(2)).sum::<f64>() / (m - 1.0);
        chi[k] = mean;
        stderr[k] = (var / m).sqrt();
    }
    Ok(LyapunovStats {
        chi,
        stderr,
        steps,
        seed,
    })
}

/// Three-branch Lyapunov dimension of the stationary measure on the plane,
/// clamped to `[0, 2]`.
pub fn lyapunov_dimension(h: f64, chi: [f64; 3]) -> Result<f64> {
    let [c1, c2, c3] = chi;
    if !(c1 > c2 && c2 > c3) {
        return Err(Error::DegenerateSpectrum(chi));
    }
    if !(h >= 0.0) {
        return Err(Error::DomainError {
            value: h,
            domain: "H >= 0",
        });
    }
    let g12 = c1 - c2;
    let d = if h <= g12 {
        h / g12
    } else if h <= 2.0 * c1 - c2 - c3 {
        1.0 + (h - g12) / (c1 - c3)
    } else {
        2.0
    };
    Ok(d.clamp(0.0, 2.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, Matrix3};
    use crate::semigroup::rauzy::{default_epsilon, rauzy_gamma_system};

    #[test]
    fn diagonal_singleton_is_exact() {
        let d = Matrix3::diagonal([rat(9, 1), rat(1, 1), rat(1, 9)]);
        let sys = SystemSpec::uniform("d", vec![d], None).unwrap();
        let st = lyapunov_exponents(&sys, 10_000, 1).unwrap();
        let l9 = 9f64.ln();
        assert!((st.chi[0] - l9).abs() < 1e-12);
        assert!(st.chi[1].abs() < 1e-12);
        assert!((st.chi[2] + l9).abs() < 1e-12);
    }

    #[test]
    fn unimodular_sum_vanishes() {
        let sys = rauzy_gamma_system(2, &default_epsilon()).unwrap();
        let st = lyapunov_exponents(&sys, 5000, 4).unwrap();
        assert!(st.sum().abs() <= 3.0 * st.stderr_sum() + 1e-12, "{st:?}");
        assert!(st.chi[0] > st.chi[1] && st.chi[1] > st.chi[2]);
    }

    #[test]
    fn too_few_steps() {
        let sys = crate::semigroup::rauzy_system();
        assert!(matches!(
            lyapunov_exponents(&sys, 999, 0),
            Err(Error::DomainError { .. })
        ));
    }

    #[test]
    fn dimension_branches() {
        let chi = [1.0, 0.2, -1.2];
        assert_eq!(lyapunov_dimension(0.0, chi).unwrap(), 0.0);
        let g = 0.8;
        let below = lyapunov_dimension(g * (1.0 - 1e-9), chi).unwrap();
        let above = lyapunov_dimension(g * (1.0 + 1e-9), chi).unwrap();
        assert!((below - 1.0).abs() < 1e-6 && (above - 1.0).abs() < 1e-6);
        assert_eq!(lyapunov_dimension(2.0 - 0.2 + 1.2, chi).unwrap(), 2.0);
        assert_eq!(lyapunov_dimension(10.0, chi).unwrap(), 2.0);
        let mut last = 0.0;
        for k in 0..400 {
            let d = lyapunov_dimension(k as f64 * 0.01, chi).unwrap();
            assert!(d >= last);
            last = d;
        }
        assert!(matches!(
            lyapunov_dimension(1.0, [1.0, 1.0, -2.0]),
            Err(Error::DegenerateSpectrum(_))
        ));
    }
}
