mod common;

use common::{gamma, random_chart_point, random_word};
use projdim_core::projective::attractor::{hausdorff_distance, max_cylinder_diameter};
use projdim_core::projective::lft::lft3;
use projdim_core::projective::{
    attractor_points, frame_for_plane, plane_frame_orthonormal, rescale_decompose, xi_partition,
    Coords, PlaneFrame, Sampler,
};
use projdim_core::semigroup::partition::sampled_partition_hits;
use projdim_core::semigroup::PrefixIndex;
use rand::Rng;

fn random_frame<R: Rng>(rng: &mut R) -> PlaneFrame {
    if rng.random_bool(0.5) {
        let d = [
            rng.random::<f64>(),
            rng.random::<f64>(),
            rng.random::<f64>() + 0.01,
        ];
        plane_frame_orthonormal(d).unwrap()
    } else {
        // a plane through a positive vector
        let p = [
            rng.random::<f64>() + 0.05,
            rng.random::<f64>() + 0.05,
            rng.random::<f64>() + 0.05,
        ];
        let q = [
            rng.random::<f64>() - 0.5,
            rng.random::<f64>() - 0.5,
            rng.random::<f64>() - 0.5,
        ];
        let n = [
            p[1] * q[2] - p[2] * q[1],
            p[2] * q[0] - p[0] * q[2],
            p[0] * q[1] - p[1] * q[0],
        ];
        frame_for_plane(n).unwrap()
    }
}

#[test]
fn rescale_identity_on_random_triples() {
    let sys = gamma(3);
    let mut rng = projdim_core::rng::stream(41, 0);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let b = random_frame(&mut rng);
        let a = sys.product(&random_word(&mut rng, &sys, 6));
        let x = random_chart_point(&mut rng, &sys);
        let r = rescale_decompose(&b, &a).unwrap();
        let f = a.f();
        let ba: [[f64; 3]; 2] = std::array::from_fn(|k| {
            std::array::from_fn(|j| (0..3).map(|i| b.rows[k][i] * f[i][j]).sum())
        });
        let xt = [x[0], x[1], 1.0];
        let direct = (0..3).map(|j| ba[0][j] * xt[j]).sum::<f64>()
            / (0..3).map(|j| ba[1][j] * xt[j]).sum::<f64>();
        worst = worst.max((direct - (r.c * r.m.project(x).unwrap() + r.t)).abs());
    }
    assert!(worst <= 1e-10, "{worst}");
}

#[test]
fn lft_composition_on_random_pairs() {
    let sys = gamma(3);
    let mut rng = projdim_core::rng::stream(42, 0);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let a = sys.product(&random_word(&mut rng, &sys, 3));
        let b = sys.product(&random_word(&mut rng, &sys, 3));
        let x = random_chart_point(&mut rng, &sys);
        let lhs = lft3(b.f(), lft3(a.f(), x).unwrap()).unwrap();
        let rhs = lft3(b.mul(&a).f(), x).unwrap();
        worst = worst
            .max((lhs[0] - rhs[0]).abs())
            .max((lhs[1] - rhs[1]).abs());
    }
    assert!(worst <= 1e-12, "{worst}");
}

#[test]
fn xi_partitions_every_sequence_once() {
    let sys = gamma(2);
    let mut rng = projdim_core::rng::stream(43, 0);
    for n in [2u32, 6] {
        let b = random_frame(&mut rng);
        let words = xi_partition(&b, &sys, n).unwrap();
        assert!(PrefixIndex::new(&words).is_prefix_free());
        assert_eq!(
            sampled_partition_hits(&sys, &words, 10_000, 9).unwrap(),
            10_000
        );
    }
}

#[test]
fn xi_ratio_drops_by_a_bounded_factor() {
    let sys = gamma(2);
    let b = plane_frame_orthonormal([0.3, 0.3, 0.9]).unwrap();
    let mut rng = projdim_core::rng::stream(44, 0);
    let mut worst = f64::INFINITY;
    for _ in 0..500 {
        let w = random_word(&mut rng, &sys, 5);
        let parent = rescale_decompose(&b, &sys.product(&w)).unwrap().ratio;
        let mut child = w.clone();
        child.push(rng.random_range(0..sys.len()));
        let r = rescale_decompose(&b, &sys.product(&child)).unwrap().ratio;
        assert!(r < parent);
        worst = worst.min(r / parent);
    }
    assert!(worst > 1e-4, "{worst}");
}

#[test]
fn chaos_game_matches_cylinder_cloud() {
    let sys = gamma(1);
    let a = attractor_points(&sys, Sampler::ChaosGame, 10_000, Coords::PlaneP, 0).unwrap();
    let b = attractor_points(&sys, Sampler::Cylinder, 10_000, Coords::PlaneP, 0).unwrap();
    let d = hausdorff_distance(&a, &b);
    let diam = max_cylinder_diameter(&sys, 8, Coords::PlaneP).unwrap();
    assert!(d <= 2.0 * diam, "{d} vs {diam}");
}
