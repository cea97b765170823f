//! Depth-first enumeration of words and their products.

use std::sync::atomic::{AtomicU64, Ordering};

use super::system::SystemSpec;
use crate::error::{Error, Result};
use crate::linalg::{singular_values, LogRatios, Matrix3};
use crate::par;

pub const DEFAULT_NODE_CAP: u64 = 20_000_000;

static NODE_CAP: AtomicU64 = AtomicU64::new(DEFAULT_NODE_CAP);

/// Upper limit on the number of words a single enumeration may visit.
pub fn node_cap() -> u64 {
    NODE_CAP.load(Ordering::Relaxed)
}

pub fn set_node_cap(cap: u64) {
    NODE_CAP.store(cap.max(1), Ordering::Relaxed);
}

/// `Σ_{k=1..n} |I|^k` when `cumulative`, else `|I|^n`.
pub fn word_count(alphabet: usize, n: usize, cumulative: bool) -> u128 {
    let k = alphabet as u128;
    let mut total: u128 = 0;
    let mut level: u128 = 1;
    for _ in 0..n {
        level = level.saturating_mul(k);
        total = total.saturating_add(level);
    }
    if cumulative {
        total
    } else {
        level
    }
}

pub fn check_budget(requested: u128) -> Result<()> {
    let cap = node_cap();
    if requested > cap as u128 {
        Err(Error::BudgetExceeded { requested, cap })
    } else {
        Ok(())
    }
}

/// A finite word together with its conjugated product `A_{i1}···A_{in}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub letters: Vec<usize>,
    pub product: Matrix3,
}

/// Streaming lexicographic enumeration of all words of length `n`.
pub struct WordStream<'a> {
    sys: &'a SystemSpec,
    idx: Vec<usize>,
    prefix: Vec<Matrix3>,
    done: bool,
}

impl<'a> WordStream<'a> {
    fn rebuild_from(&mut self, from: usize) {
        for k in from..self.idx.len() {
            let next = self.prefix[k].mul(&self.sys.raw_letters()[self.idx[k]]);
            self.prefix[k + 1] = next;
        }
    }
}

impl Iterator for WordStream<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let n = self.idx.len();
        let word = Word {
            letters: self.idx.clone(),
            product: self.sys.conjugate(&self.prefix[n]),
        };
        let k = self.sys.len();
        let mut pos = n;
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.idx[pos] += 1;
            if self.idx[pos] < k {
                self.rebuild_from(pos);
                break;
            }
            self.idx[pos] = 0;
        }
        Some(word)
    }
}

/// All `|I|^n` words of length `n >= 1`, lexicographically.
pub fn enumerate_words(sys: &SystemSpec, n: usize) -> Result<WordStream<'_>> {
    if n == 0 {
        return Err(Error::DomainError {
            value: 0.0,
            domain: "word length n >= 1",
        });
    }
    check_budget(word_count(sys.len(), n, false))?;
    let mut s = WordStream {
        sys,
        idx: vec![0; n],
        prefix: vec![Matrix3::identity(); n + 1],
        done: false,
    };
    s.rebuild_from(0);
    Ok(s)
}

/// Whether a depth-first walk continues below the current node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Descend {
    Yes,
    No,
}

/// Depth-first walk of the subtree rooted at letter `root`, visiting every
/// node in preorder with its letters and conjugated product. Nodes at
/// `max_depth` are never expanded.
pub fn walk_subtree<F>(sys: &SystemSpec, root: usize, max_depth: usize, visit: &mut F) -> Result<()>
where
    F: FnMut(&[usize], &Matrix3) -> Result<Descend>,
{
    fn rec<F>(
        sys: &SystemSpec,
        path: &mut Vec<usize>,
        raw: &Matrix3,
        max_depth: usize,
        visit: &mut F,
    ) -> Result<()>
    where
        F: FnMut(&[usize], &Matrix3) -> Result<Descend>,
    {
        let eff = sys.conjugate(raw);
        if visit(path, &eff)? == Descend::No || path.len() >= max_depth {
            return Ok(());
        }
        for (j, letter) in sys.raw_letters().iter().enumerate() {
            path.push(j);
            rec(sys, path, &raw.mul(letter), max_depth, visit)?;
            path.pop();
        }
        Ok(())
    }
    let mut path = vec![root];
    let raw = sys.raw_letters()[root].clone();
    rec(sys, &mut path, &raw, max_depth, visit)
}

/// Log contraction ratios of every word, grouped by length `1..=n_max`, each
/// level in lexicographic order.
#[derive(Clone, Debug)]
pub struct LevelTables {
    pub levels: Vec<Vec<LogRatios>>,
    pub alphabet: usize,
}

impl LevelTables {
    pub fn build(sys: &SystemSpec, n_max: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::DomainError {
                value: 0.0,
                domain: "depth n >= 1",
            });
        }
        check_budget(word_count(sys.len(), n_max, true))?;
        let parts: Vec<Result<Vec<Vec<LogRatios>>>> = par::map_indexed(sys.len(), |root| {
            let mut levels = vec![Vec::new(); n_max];
            walk_subtree(sys, root, n_max, &mut |path, prod| {
                levels[path.len() - 1].push(singular_values(prod)?.log_ratios());
                Ok(Descend::Yes)
            })?;
            Ok(levels)
        });
        let mut levels: Vec<Vec<LogRatios>> = (1..=n_max)
            .map(|k| Vec::with_capacity(word_count(sys.len(), k, false) as usize))
            .collect();
        for part in parts {
            for (k, lv) in part?.into_iter().enumerate() {
                levels[k].extend(lv);
            }
        }
        Ok(LevelTables {
            levels,
            alphabet: sys.len(),
        })
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Words of length `n` (1-based).
    pub fn level(&self, n: usize) -> &[LogRatios] {
        &self.levels[n - 1]
    }
}
