//! Algebraic diagnostics: positivity, Diophantine distinctness,
//! Lie-algebra closure and a common-eigenvector reducibility probe.

use std::collections::HashMap;

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::system::{ContractionClass, SystemSpec};
use super::words::enumerate_words;
use crate::error::{Error, Result};
use crate::linalg::jacobi::{gram, symmetric_eigen};
use crate::linalg::{format_rational, Float3, Matrix3};
use crate::par;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PositivityReport {
    pub positive: bool,
    /// `min entry / max entry`, minimized over the conjugated letters.
    #[serde(serialize_with = "ser_rational")]
    pub entry_ratio: BigRational,
    pub class: ContractionClass,
}

fn ser_rational<S: serde::Serializer>(
    x: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

pub fn positivity_report(sys: &SystemSpec) -> PositivityReport {
    let ratio = sys
        .letters()
        .iter()
        .map(|a| {
            let (lo, hi) = a.entry_range();
            if hi.is_zero() {
                BigRational::zero()
            } else {
                lo / hi
            }
        })
        .min()
        .unwrap_or_else(BigRational::zero);
    PositivityReport {
        positive: sys.letters().iter().all(Matrix3::all_positive),
        entry_ratio: ratio,
        class: sys.contraction_class(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LevelGap {
    pub n: usize,
    pub distinct: bool,
    pub min_gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiophantineReport {
    pub all_distinct: bool,
    /// Smallest operator-norm distance between distinct-index words of equal length.
    pub min_gap: f64,
    /// Integer alphabet and all products distinct, so every gap is at least 1.
    pub integer_gap_certified: bool,
    pub first_collision: Option<(Vec<usize>, Vec<usize>)>,
    pub levels: Vec<LevelGap>,
}

pub(crate) fn spectral_norm_f64(m: &Float3) -> f64 {
    symmetric_eigen(&gram(m)).values[0].max(0.0).sqrt()
}

fn level_min_gap(floats: &[Float3]) -> f64 {
    let bests = par::map_indexed(floats.len(), |i| {
        let fi = &floats[i];
        let mut best = f64::INFINITY;
        for fj in &floats[i + 1..] {
            let mut diff = [[0.0; 3]; 3];
            let mut m = 0.0f64;
            for r in 0..3 {
                for c in 0..3 {
                    diff[r][c] = fi[r][c] - fj[r][c];
                    m = m.max(diff[r][c].abs());
                }
            }
            // ‖X‖₂ >= max |x_ij|, so only closer candidates need a norm
            if m < best {
                best = best.min(spectral_norm_f64(&diff));
            }
        }
        best
    });
    bests.into_iter().fold(f64::INFINITY, f64::min)
}

/// Checks that all products of each length `n <= n_max` are distinct and
/// reports the smallest gap between them.
pub fn diophantine_check(sys: &SystemSpec, n_max: usize) -> Result<DiophantineReport> {
    let mut levels = Vec::new();
    let mut first_collision = None;
    for n in 1..=n_max {
        let words: Vec<_> = enumerate_words(sys, n)?.collect();
        let mut seen: HashMap<&Matrix3, usize> = HashMap::with_capacity(words.len());
        let mut distinct = true;
        for (k, w) in words.iter().enumerate() {
            if let Some(&prev) = seen.get(&w.product) {
                distinct = false;
                if first_collision.is_none() {
                    first_collision = Some((words[prev].letters.clone(), w.letters.clone()));
                }
                break;
            }
            seen.insert(&w.product, k);
        }
        let min_gap = if distinct {
            let floats: Vec<Float3> = words.iter().map(|w| *w.product.f()).collect();
            level_min_gap(&floats)
        } else {
            0.0
        };
        levels.push(LevelGap {
            n,
            distinct,
            min_gap,
        });
    }
    let all_distinct = levels.iter().all(|l| l.distinct);
    let min_gap = levels
        .iter()
        .map(|l| l.min_gap)
        .fold(f64::INFINITY, f64::min);
    let integer = sys.letters().iter().all(Matrix3::is_integer);
    Ok(DiophantineReport {
        all_distinct,
        min_gap,
        integer_gap_certified: integer && all_distinct,
        first_collision,
        levels,
    })
}

/// Incremental row-echelon basis of rational vectors.
#[derive(Clone, Debug, Default)]
pub struct RationalBasis {
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl RationalBasis {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the current rows.
    pub fn insert(&mut self, mut v: Vec<BigRational>) -> bool {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let f = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &f * r;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                let inv = v[p].recip();
                for x in v.iter_mut() {
                    *x *= &inv;
                }
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }
}

/// Dimension of the Lie algebra generated by traceless matrices under
/// `[X, Y] = XY - YX`, with exact rank.
pub fn lie_algebra_dimension(generators: &[Matrix3]) -> Result<usize> {
    if let Some(index) = generators.iter().position(|g| !g.is_traceless()) {
        return Err(Error::NotTraceless { index });
    }
    let mut basis = RationalBasis::default();
    let mut elems: Vec<Matrix3> = Vec::new();
    for g in generators {
        if basis.insert(g.to_vec9()) {
            elems.push(g.clone());
        }
    }
    let mut i = 0;
    while i < elems.len() && basis.rank() < 8 {
        for j in 0..i {
            let c = elems[i].commutator(&elems[j]);
            if basis.insert(c.to_vec9()) {
                elems.push(c);
            }
        }
        i += 1;
    }
    Ok(basis.rank())
}

/// `log A = N - N²/2` when `N = A - I` satisfies `N³ = 0` and `N != 0`.
pub fn unipotent_log(a: &Matrix3) -> Option<Matrix3> {
    let n = a.sub(&Matrix3::identity());
    let n2 = n.mul(&n);
    if n == Matrix3::zero() || n2.mul(&n) != Matrix3::zero() {
        return None;
    }
    Some(n.sub(&n2.scale(&BigRational::new(1.into(), 2.into()))))
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct IrreducibilityReport {
    /// Primitive direction of a common invariant line, if one was found.
    pub invariant_line: Option<[BigRational; 3]>,
    /// Normal of a common invariant plane, if one was found.
    pub invariant_plane: Option<[BigRational; 3]>,
}

impl IrreducibilityReport {
    pub fn to_json(&self) -> serde_json::Value {
        let f = |v: &Option<[BigRational; 3]>| {
            v.as_ref()
                .map(|x| serde_json::json!(x.iter().map(format_rational).collect::<Vec<_>>()))
                .unwrap_or(serde_json::Value::Null)
        };
        serde_json::json!({
            "invariant_line": f(&self.invariant_line),
            "invariant_plane": f(&self.invariant_plane),
        })
    }
}

const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational eigenvalues by the rational root theorem on the characteristic
/// polynomial; empty when its coefficients are too large to factor.
pub fn rational_eigenvalues(a: &Matrix3) -> Vec<BigRational> {
    let e = a.entries();
    let c2 = a.trace();
    let minor = |i: usize, j: usize| &e[i][i] * &e[j][j] - &e[i][j] * &e[j][i];
    let c1 = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let c0 = a.det();
    // λ³ - c2 λ² + c1 λ - c0
    let coeffs = [-c0, c1, -c2, BigRational::one()];
    let l = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();
    let eval = |x: &BigRational| {
        coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    };
    let mut roots: Vec<BigRational> = Vec::new();
    if ints[0].is_zero() {
        roots.push(BigRational::zero());
    }
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(&ints[3])) else {
        if !ints[0].is_zero() {
            log::warn!("characteristic polynomial too large for the rational root search");
        }
        return roots;
    };
    for p in &ps {
        for q in &qs {
            for sign in [1, -1] {
                let x = BigRational::new(p * sign, q.clone());
                if !roots.contains(&x) && eval(&x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    roots.reverse();
    roots
}

/// Basis of `{x : R x = 0}` for rational constraint rows `R`.
fn null_space(constraints: &[[BigRational; 3]]) -> Vec<[BigRational; 3]> {
    let mut rows: Vec<[BigRational; 3]> = constraints.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..3 {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let f = rows[k][c].clone();
                let pr = rows[r].clone();
                for (x, y) in rows[k].iter_mut().zip(pr.iter()) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..3)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v: [BigRational; 3] = std::array::from_fn(|_| BigRational::zero());
            v[free] = BigRational::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[k][free].clone();
            }
            v
        })
        .collect()
}

fn shift_rows(a: &Matrix3, lambda: &BigRational) -> [[BigRational; 3]; 3] {
    let mut e = a.entries();
    for (i, row) in e.iter_mut().enumerate() {
        row[i] -= lambda;
    }
    e
}

const BRANCH_LIMIT: usize = 4096;

/// A common eigenvector with rational eigenvalues, found by branching over
/// the eigenvalues of each matrix and intersecting eigenspaces exactly.
pub fn common_eigenvector(mats: &[Matrix3]) -> Option<[BigRational; 3]> {
    let eig: Vec<Vec<BigRational>> = mats.iter().map(rational_eigenvalues).collect();
    let mut frontier: Vec<Vec<[BigRational; 3]>> = vec![Vec::new()];
    for (a, lams) in mats.iter().zip(&eig) {
        let mut next = Vec::new();
        for cons in &frontier {
            for lam in lams {
                let mut c = cons.clone();
                c.extend(shift_rows(a, lam));
                if !null_space(&c).is_empty() {
                    next.push(c);
                }
            }
        }
        if next.len() > BRANCH_LIMIT {
            next.truncate(BRANCH_LIMIT);
        }
        frontier = next;
        if frontier.is_empty() {
            return None;
        }
    }
    let v = null_space(&frontier[0]).into_iter().next()?;
    Some(primitive(v))
}

fn primitive(v: [BigRational; 3]) -> [BigRational; 3] {
    let lead = v
        .iter()
        .find(|x| !x.is_zero())
        .cloned()
        .unwrap_or_else(BigRational::one);
    let scaled = v.map(|x| x / &lead);
    let l = scaled
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = scaled
        .iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x /= &g;
        }
    }
    std::array::from_fn(|i| BigRational::from_integer(ints[i].clone()))
}

fn is_eigenvector(a: &Matrix3, v: &[BigRational; 3]) -> bool {
    let e = a.entries();
    let av: Vec<BigRational> = (0..3)
        .map(|i| (0..3).map(|j| &e[i][j] * &v[j]).sum())
        .collect();
    // av parallel to v: all 2x2 cross terms vanish
    (0..3).all(|i| (0..3).all(|j| (&av[i] * &v[j] - &av[j] * &v[i]).is_zero()))
}

/// Looks for a common invariant line (eigenvector of every letter) and a
/// common invariant plane (eigenvector of every transpose). Candidates are
/// re-verified exactly on all words of length `<= depth`.
pub fn irreducibility_probe(sys: &SystemSpec, depth: usize) -> Result<IrreducibilityReport> {
    let letters = sys.letters();
    let transposes: Vec<Matrix3> = letters.iter().map(Matrix3::transpose).collect();
    let mut line = common_eigenvector(letters);
    let mut plane = common_eigenvector(&transposes);
    for n in 1..=depth.max(1) {
        if line.is_none() && plane.is_none() {
            break;
        }
        for w in enumerate_words(sys, n)? {
            if line
                .as_ref()
                .is_some_and(|v| !is_eigenvector(&w.product, v))
            {
                line = None;
            }
            if plane
                .as_ref()
                .is_some_and(|v| !is_eigenvector(&w.product.transpose(), v))
            {
                plane = None;
            }
        }
    }
    Ok(IrreducibilityReport {
        invariant_line: line,
        invariant_plane: plane,
    })
}
