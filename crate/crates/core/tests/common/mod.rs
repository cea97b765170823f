#![allow(dead_code)]

use projdim_core::semigroup::rauzy::{default_epsilon, rauzy_gamma_system};
use projdim_core::{Matrix3, SystemSpec};
use rand::Rng;

pub fn gamma(n: usize) -> SystemSpec {
    rauzy_gamma_system(n, &default_epsilon()).unwrap()
}

/// A random word of length `1..=max_len` over the alphabet of `sys`.
pub fn random_word<R: Rng>(rng: &mut R, sys: &SystemSpec, max_len: usize) -> Vec<usize> {
    let len = rng.random_range(1..=max_len);
    (0..len).map(|_| rng.random_range(0..sys.len())).collect()
}

/// Positive unimodular matrices: products of conjugated Γ₃ letters.
pub fn random_positive_unimodular<R: Rng>(rng: &mut R, max_len: usize) -> Matrix3 {
    let sys = gamma(3);
    let w = random_word(rng, &sys, max_len);
    sys.product(&w)
}

/// A point of the plane chart inside the attractor hull: image of the
/// barycentre under a random word.
pub fn random_chart_point<R: Rng>(rng: &mut R, sys: &SystemSpec) -> [f64; 2] {
    let a = sys.product(&random_word(rng, sys, 4));
    let f = a.f();
    let v: [f64; 3] = std::array::from_fn(|i| f[i].iter().sum());
    [v[0] / v[2], v[1] / v[2]]
}
