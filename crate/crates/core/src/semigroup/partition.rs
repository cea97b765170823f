//! First-passage (stopping-time) word families.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use super::system::SystemSpec;
use super::words::{node_cap, walk_subtree, Descend, Word};
use crate::error::{Error, Result};
use crate::linalg::{singular_values, Matrix3};
use crate::par;
use crate::rng::{stream, LetterSampler};

/// Depth at which an undecided branch is declared non-contracting.
pub const DEFAULT_DEPTH_CAP: usize = 64;

/// Minimal words whose product satisfies `stop`, no proper nonempty prefix
/// satisfying it. The result is prefix-free and lexicographically ordered.
pub fn first_passage<F>(sys: &SystemSpec, depth_cap: usize, stop: F) -> Result<Vec<Word>>
where
    F: Fn(&[usize], &Matrix3) -> Result<bool> + Sync + Send,
{
    let visited = AtomicU64::new(0);
    let cap = node_cap();
    let parts: Vec<Result<Vec<Word>>> = par::map_indexed(sys.len(), |root| {
        let mut out = Vec::new();
        walk_subtree(sys, root, depth_cap, &mut |path, prod| {
            let n = visited.fetch_add(1, Ordering::Relaxed) + 1;
            if n > cap {
                return Err(Error::BudgetExceeded {
                    requested: n as u128,
                    cap,
                });
            }
            if stop(path, prod)? {
                out.push(Word {
                    letters: path.to_vec(),
                    product: prod.clone(),
                });
                return Ok(Descend::No);
            }
            if path.len() >= depth_cap {
                return Err(Error::NotContracting { depth: depth_cap });
            }
            Ok(Descend::Yes)
        })?;
        Ok(out)
    });
    let mut words = Vec::new();
    for p in parts {
        words.extend(p?);
    }
    Ok(words)
}

/// `Ψ_n`: first passage of `α₂/α₁ <= 2⁻ⁿ`. For `n = 0` every letter qualifies.
pub fn stopping_partition_psi(sys: &SystemSpec, n: u32) -> Result<Vec<Word>> {
    stopping_partition_psi_capped(sys, n, DEFAULT_DEPTH_CAP)
}

pub fn stopping_partition_psi_capped(
    sys: &SystemSpec,
    n: u32,
    depth_cap: usize,
) -> Result<Vec<Word>> {
    let threshold = 0.5f64.powi(n as i32);
    first_passage(sys, depth_cap, |_, prod| {
        let sv = singular_values(prod)?;
        Ok(sv.a2 / sv.a1 <= threshold)
    })
}

/// Membership index for a prefix-free family of words.
#[derive(Clone, Debug)]
pub struct PrefixIndex {
    words: HashSet<Vec<usize>>,
    max_len: usize,
}

impl PrefixIndex {
    pub fn new(words: &[Word]) -> Self {
        PrefixIndex {
            words: words.iter().map(|w| w.letters.clone()).collect(),
            max_len: words.iter().map(|w| w.letters.len()).max().unwrap_or(0),
        }
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Number of family members that are prefixes of `seq`.
    pub fn prefix_hits(&self, seq: &[usize]) -> usize {
        (1..=self.max_len.min(seq.len()))
            .filter(|&k| self.words.contains(&seq[..k]))
            .count()
    }

    /// No member is a proper prefix of another.
    pub fn is_prefix_free(&self) -> bool {
        self.words
            .iter()
            .all(|w| (1..w.len()).all(|k| !self.words.contains(&w[..k])))
    }
}

/// Draws `count` Bernoulli sequences of length `len` and reports how many
/// hit the family exactly once.
pub fn sampled_partition_hits(
    sys: &SystemSpec,
    words: &[Word],
    count: usize,
    seed: u64,
) -> Result<usize> {
    let index = PrefixIndex::new(words);
    let sampler = LetterSampler::new(sys.probabilities_f64())?;
    let len = index.max_len();
    let mut rng = stream(seed, 0);
    let mut good = 0;
    let mut seq = vec![0usize; len];
    for _ in 0..count {
        for x in seq.iter_mut() {
            *x = sampler.sample(&mut rng);
        }
        if index.prefix_hits(&seq) == 1 {
            good += 1;
        }
    }
    Ok(good)
}

/// Total Bernoulli mass of a word family.
pub fn family_mass(sys: &SystemSpec, words: &[Word]) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for w in words {
        let y = sys.word_probability(&w.letters) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::semigroup::rauzy::rauzy_system;

    fn diag9() -> SystemSpec {
        let d = Matrix3::diagonal([rat(9, 1), rat(1, 1), rat(1, 9)]);
        SystemSpec::uniform("diag9", vec![d], None).unwrap()
    }

    #[test]
    fn zero_resolution_gives_alphabet() {
        let sys = rauzy_system();
        let psi = stopping_partition_psi(&sys, 0).unwrap();
        let letters: Vec<Vec<usize>> = psi.iter().map(|w| w.letters.clone()).collect();
        assert_eq!(letters, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn diagonal_singleton_stops_after_one_letter() {
        let psi = stopping_partition_psi(&diag9(), 3).unwrap();
        assert_eq!(psi.len(), 1);
        assert_eq!(psi[0].letters, vec![0]);
        let psi = stopping_partition_psi(&diag9(), 7).unwrap();
        assert_eq!(psi[0].letters, vec![0, 0, 0]);
    }

    #[test]
    fn identity_does_not_contract() {
        let sys = SystemSpec::uniform("id", vec![Matrix3::identity()], None).unwrap();
        assert_eq!(
            stopping_partition_psi_capped(&sys, 1, 10),
            Err(Error::NotContracting { depth: 10 })
        );
    }

    #[test]
    fn rauzy_family_is_a_partition() {
        let sys = rauzy_system();
        let psi = stopping_partition_psi(&sys, 3).unwrap();
        assert!(PrefixIndex::new(&psi).is_prefix_free());
        assert!((family_mass(&sys, &psi) - 1.0).abs() < 1e-12);
        assert_eq!(sampled_partition_hits(&sys, &psi, 2000, 3).unwrap(), 2000);
    }
}
