mod common;

use common::gamma;
use projdim_core::semigroup::partition::sampled_partition_hits;
use projdim_core::semigroup::rauzy::{
    gamma_positivity_by_level, rauzy_curve_derivatives, rauzy_lie_generators,
};
use projdim_core::semigroup::{
    diophantine_check, irreducibility_probe, lie_algebra_dimension, rauzy_system,
    stopping_partition_psi, unipotent_log, PrefixIndex,
};

#[test]
fn psi_partitions_every_sequence_once() {
    let sys = gamma(2);
    for n in [1u32, 4, 8] {
        let words = stopping_partition_psi(&sys, n).unwrap();
        assert!(PrefixIndex::new(&words).is_prefix_free());
        assert_eq!(
            sampled_partition_hits(&sys, &words, 10_000, n as u64).unwrap(),
            10_000
        );
    }
}

#[test]
fn rauzy_is_diophantine_to_depth_eight() {
    let rep = diophantine_check(&rauzy_system(), 8).unwrap();
    assert!(rep.all_distinct);
    assert!(rep.integer_gap_certified);
    assert!(rep.min_gap >= 1.0);
}

#[test]
fn curve_derivatives_span_sl3() {
    let raw = rauzy_curve_derivatives();
    assert_eq!(raw.len(), 6);
    assert_eq!(lie_algebra_dimension(&rauzy_lie_generators()).unwrap(), 8);
    let logs: Vec<_> = projdim_core::semigroup::rauzy_alphabet()
        .iter()
        .map(|a| unipotent_log(a).unwrap())
        .collect();
    assert_eq!(lie_algebra_dimension(&logs).unwrap(), 8);
}

#[test]
fn conjugated_gamma_letters_are_positive_at_one_sixth() {
    for (n, positive, _) in
        gamma_positivity_by_level(50, &projdim_core::semigroup::rauzy::default_epsilon())
    {
        assert!(positive, "level {n}");
    }
}

#[test]
fn rauzy_has_no_rational_invariant_subspace() {
    let rep = irreducibility_probe(&rauzy_system(), 2).unwrap();
    assert!(rep.invariant_line.is_none() && rep.invariant_plane.is_none());
}
