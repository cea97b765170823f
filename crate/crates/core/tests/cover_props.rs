mod common;

use common::gamma;
use projdim_core::cover::{box_dimension_estimate, cone_constant, svd_cover_upper};
use projdim_core::pressure::zeta_truncated;
use projdim_core::projective::{attractor_points, Coords, Sampler};
use projdim_core::semigroup::rauzy_system;

#[test]
fn gamma_ten_cost_shrinks_with_delta() {
    let sys = gamma(10);
    let costs: Vec<f64> = [4, 6, 8]
        .iter()
        .map(|&k| {
            svd_cover_upper(&sys, 1.75, 2f64.powi(-k))
                .unwrap()
                .cover_cost
        })
        .collect();
    assert!(costs.windows(2).all(|w| w[1] <= w[0]), "{costs:?}");
}

#[test]
fn full_dimension_cost_is_bounded_by_zeta() {
    let sys = gamma(1);
    for k in [4, 6] {
        let r = svd_cover_upper(&sys, 2.0, 2f64.powi(-k)).unwrap();
        let z = zeta_truncated(&sys, 2.0, r.max_word_len).unwrap();
        let bound = r.cone_constant.powi(4) * r.radius.powi(2) * (z.value + z.pruning_loss);
        assert!(
            r.cover_cost <= bound * (1.0 + 1e-12),
            "{} > {bound}",
            r.cover_cost
        );
    }
}

#[test]
fn singular_value_part_decreases_in_s() {
    let sys = gamma(1);
    let sums: Vec<f64> = [1.0, 1.25, 1.5, 1.75, 2.0]
        .iter()
        .map(|&s| svd_cover_upper(&sys, s, 1e-3).unwrap().svf_sum)
        .collect();
    assert!(sums.windows(2).all(|w| w[1] <= w[0]), "{sums:?}");
}

#[test]
fn cone_constant_regression() {
    let c = cone_constant(&gamma(1)).unwrap();
    assert!((c - 52.943_549_877_871_82).abs() < 1e-9, "{c}");
}

#[test]
fn rauzy_box_dimension_band() {
    let cloud = attractor_points(
        &rauzy_system(),
        Sampler::ChaosGame,
        1_000_000,
        Coords::SimplexS,
        0,
    )
    .unwrap();
    let e = box_dimension_estimate(&cloud, &(4..=10).collect::<Vec<_>>()).unwrap();
    assert!((1.1..=1.9).contains(&e.value), "{}", e.value);
}
