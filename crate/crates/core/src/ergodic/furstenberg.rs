//! Sampling the stationary measure on planes through the dual action.

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::Float3;
use crate::rng::{stream, LetterSampler};
use crate::semigroup::SystemSpec;

pub const MIN_STEPS: usize = 100;

/// Starting plane: normal `(1, 2, -3)/√14`. It has no zero coordinate, so
/// it is generic for diagonal letters, and it contains the positive
/// vector `(1, 1, 1)`.
pub const INITIAL_NORMAL: [f64; 3] = [
    0.267_261_241_912_424_4,
    0.534_522_483_824_848_8,
    -0.801_783_725_737_273_2,
];

/// Inverses of the letters; the plane `A*V` has normal `A⁻¹n`.
pub(crate) fn inverse_letters(sys: &SystemSpec) -> Result<Vec<Float3>> {
    sys.letters()
        .iter()
        .map(|a| a.inverse().map(|m| *m.f()).ok_or(Error::SingularInput))
        .collect()
}

pub(crate) fn run_chain<R: Rng>(
    inv: &[Float3],
    sampler: &LetterSampler,
    steps: usize,
    rng: &mut R,
) -> [f64; 3] {
    let mut n = INITIAL_NORMAL;
    for _ in 0..steps {
        let m = &inv[sampler.sample(rng)];
        let y: [f64; 3] = std::array::from_fn(|i| m[i][0] * n[0] + m[i][1] * n[1] + m[i][2] * n[2]);
        let len = (y[0] * y[0] + y[1] * y[1] + y[2] * y[2]).sqrt();
        n = y.map(|x| x / len);
    }
    crate::projective::frame::canonical_sign(n)
}

/// Unit normal of `A_{i_k}* ··· A_{i_1}* V₀` after `steps` random letters.
pub fn furstenberg_plane_sample(sys: &SystemSpec, steps: usize, seed: u64) -> Result<[f64; 3]> {
    if steps < MIN_STEPS {
        return Err(Error::DomainError {
            value: steps as f64,
            domain: "steps >= 100",
        });
    }
    let inv = inverse_letters(sys)?;
    let sampler = LetterSampler::new(sys.probabilities_f64())?;
    Ok(run_chain(&inv, &sampler, steps, &mut stream(seed, 0)))
}
