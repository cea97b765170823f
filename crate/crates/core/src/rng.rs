//! Reproducible random streams keyed by `(seed, stream index)`.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Independent generator for one worker or chain.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Draws letter indices according to a probability vector.
#[derive(Clone, Debug)]
pub struct LetterSampler {
    dist: WeightedIndex<f64>,
}

impl LetterSampler {
    pub fn new(probabilities: &[f64]) -> Result<Self> {
        let dist =
            WeightedIndex::new(probabilities).map_err(|e| Error::BadVector(e.to_string()))?;
        Ok(LetterSampler { dist })
    }

    #[inline]
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        self.dist.sample(rng)
    }
}
