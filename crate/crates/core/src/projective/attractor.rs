//! Point clouds on the projective attractor: chaos game and cylinder images.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::frame::PlaneFrame;
use crate::error::{Error, Result};
use crate::linalg::Float3;
use crate::par;
use crate::rng::{stream, LetterSampler};
use crate::semigroup::partition::stopping_partition_psi;
use crate::semigroup::SystemSpec;

/// Transient discarded at the start of every chaos-game chain.
pub const BURN_IN: usize = 100;
/// Chains run by the chaos game; fixed so output does not depend on threads.
pub const CHAINS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coords {
    /// Affine chart `(v₁/v₃, v₂/v₃)`.
    PlaneP,
    /// Barycentric coordinates `v / Σ v_i`.
    SimplexS,
}

impl Coords {
    pub fn dim(self) -> usize {
        match self {
            Coords::PlaneP => 2,
            Coords::SimplexS => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sampler {
    ChaosGame,
    Cylinder,
}

/// Points stored contiguously, `dim` coordinates each.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    pub coords: Coords,
    data: Vec<f64>,
}

impl PointCloud {
    pub fn from_points(coords: Coords, pts: &[Vec<f64>]) -> Result<Self> {
        let dim = coords.dim();
        if pts.iter().any(|p| p.len() != dim) {
            return Err(Error::DomainError {
                value: dim as f64,
                domain: "points of the coordinate dimension",
            });
        }
        Ok(PointCloud {
            coords,
            data: pts.concat(),
        })
    }

    fn from_simplex(coords: Coords, pts: &[[f64; 3]]) -> Self {
        let mut data = Vec::with_capacity(pts.len() * coords.dim());
        for p in pts {
            match coords {
                Coords::PlaneP => data.extend([p[0] / p[2], p[1] / p[2]]),
                Coords::SimplexS => data.extend(p),
            }
        }
        PointCloud { coords, data }
    }

    pub fn dim(&self) -> usize {
        self.coords.dim()
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        let d = self.dim();
        &self.data[i * d..(i + 1) * d]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.dim())
    }
}

#[inline]
fn act(m: &Float3, v: [f64; 3]) -> [f64; 3] {
    let y: [f64; 3] = std::array::from_fn(|i| m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2]);
    let s = y[0] + y[1] + y[2];
    [y[0] / s, y[1] / s, y[2] / s]
}

/// Letters must be nonnegative without zero rows, and some word of length
/// at most 3 must be positive, so the cone is mapped into itself and
/// eventually strictly inside.
pub fn check_contracting(sys: &SystemSpec) -> Result<()> {
    let letters = sys.letters();
    if let Some(i) = letters
        .iter()
        .position(|a| !a.all_nonnegative() || a.f().iter().any(|row| row.iter().all(|x| *x == 0.0)))
    {
        return Err(Error::NotContracting { depth: i });
    }
    let k = letters.len();
    let mut frontier: Vec<crate::linalg::Matrix3> = letters.to_vec();
    for depth in 1..=3 {
        if frontier.iter().any(|m| m.all_positive()) {
            return Ok(());
        }
        if depth < 3 {
            frontier = frontier
                .iter()
                .flat_map(|m| letters.iter().map(move |a| m.mul(a)))
                .take(k.pow(3))
                .collect();
        }
    }
    Err(Error::NotContracting { depth: 3 })
}

const START: [f64; 3] = [1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0];

fn chaos_simplex(sys: &SystemSpec, budget: usize, seed: u64) -> Result<Vec<[f64; 3]>> {
    let sampler = LetterSampler::new(sys.probabilities_f64())?;
    let mats: Vec<Float3> = sys.letters().iter().map(|a| *a.f()).collect();
    let chunks = par::map_indexed(CHAINS, |c| {
        let count = budget / CHAINS + usize::from(c < budget % CHAINS);
        let mut rng = stream(seed, c as u64);
        let mut x = START;
        for _ in 0..BURN_IN {
            x = act(&mats[sampler.sample(&mut rng)], x);
        }
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            x = act(&mats[sampler.sample(&mut rng)], x);
            out.push(x);
        }
        out
    });
    Ok(chunks.concat())
}

/// Smallest `n` with `|Ψ_n| >= budget`, images of the barycentre under
/// every word of `Ψ_n`.
fn cylinder_simplex(sys: &SystemSpec, budget: usize) -> Result<Vec<[f64; 3]>> {
    let mut n = 0u32;
    loop {
        let words = stopping_partition_psi(sys, n)?;
        if words.len() >= budget || n >= 60 {
            return Ok(words.iter().map(|w| act(w.product.f(), START)).collect());
        }
        n += 1;
    }
}

/// Samples of the attractor `K`. The chaos game draws letters from the
/// Bernoulli measure; the cylinder sampler maps a base point through `Ψ_n`.
pub fn attractor_points(
    sys: &SystemSpec,
    sampler: Sampler,
    budget: usize,
    coords: Coords,
    seed: u64,
) -> Result<PointCloud> {
    check_contracting(sys)?;
    let pts = match sampler {
        Sampler::ChaosGame => chaos_simplex(sys, budget, seed)?,
        Sampler::Cylinder => cylinder_simplex(sys, budget)?,
    };
    if coords == Coords::PlaneP && pts.iter().any(|p| p[2] <= 0.0) {
        return Err(Error::DenominatorZero);
    }
    Ok(PointCloud::from_simplex(coords, &pts))
}

/// `count` samples of `φ_B(x)` with `x ~ μ`, from the chaos game.
pub fn project_measure_samples(
    sys: &SystemSpec,
    b: &PlaneFrame,
    count: usize,
    seed: u64,
) -> Result<Vec<f64>> {
    check_contracting(sys)?;
    project_points(&chaos_simplex(sys, count, seed)?, b)
}

/// `φ_B` applied to points given as positive vectors.
pub fn project_points(pts: &[[f64; 3]], b: &PlaneFrame) -> Result<Vec<f64>> {
    pts.iter().map(|p| b.project_vector(*p)).collect()
}

/// Raw `μ` samples as simplex vectors, for repeated projection.
pub fn measure_samples(sys: &SystemSpec, count: usize, seed: u64) -> Result<Vec<[f64; 3]>> {
    check_contracting(sys)?;
    chaos_simplex(sys, count, seed)
}

/// Symmetric Hausdorff distance between two clouds of equal dimension.
pub fn hausdorff_distance(a: &PointCloud, b: &PointCloud) -> f64 {
    fn one_sided(a: &PointCloud, b: &PointCloud) -> f64 {
        par::map_indexed(a.len(), |i| {
            let p = a.point(i);
            b.iter()
                .map(|q| p.iter().zip(q).map(|(x, y)| (x - y) * (x - y)).sum::<f64>())
                .fold(f64::INFINITY, f64::min)
        })
        .into_iter()
        .fold(0.0, f64::max)
        .sqrt()
    }
    one_sided(a, b).max(one_sided(b, a))
}

/// Largest cylinder diameter over `Ψ_n`, in the given coordinates. Each
/// cylinder lies in the image of the cone spanned by all letter columns,
/// whose diameter is attained at the images of those columns.
pub fn max_cylinder_diameter(sys: &SystemSpec, n: u32, coords: Coords) -> Result<f64> {
    let cols: Vec<[f64; 3]> = sys
        .letters()
        .iter()
        .flat_map(|a| {
            let f = *a.f();
            (0..3).map(move |j| [f[0][j], f[1][j], f[2][j]])
        })
        .collect();
    let to = |v: [f64; 3]| -> Vec<f64> {
        match coords {
            Coords::PlaneP => vec![v[0] / v[2], v[1] / v[2]],
            Coords::SimplexS => v.to_vec(),
        }
    };
    let mut best = 0.0f64;
    for w in stopping_partition_psi(sys, n)? {
        let imgs: Vec<Vec<f64>> = cols.iter().map(|c| to(act(w.product.f(), *c))).collect();
        for i in 0..imgs.len() {
            for j in i + 1..imgs.len() {
                let d: f64 = imgs[i]
                    .iter()
                    .zip(&imgs[j])
                    .map(|(x, y)| (x - y) * (x - y))
                    .sum();
                best = best.max(d.sqrt());
            }
        }
    }
    Ok(best)
}

/// Uniform points of the unit square, for calibration.
pub fn uniform_square<R: Rng>(rng: &mut R, count: usize) -> PointCloud {
    let data = (0..2 * count).map(|_| rng.random::<f64>()).collect();
    PointCloud {
        coords: Coords::PlaneP,
        data,
    }
}
