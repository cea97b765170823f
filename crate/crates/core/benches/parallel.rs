//! Parallel kernels against the same code pinned to one worker.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;

use projdim_core::ergodic::lyapunov_exponents;
use projdim_core::projective::{attractor_points, Coords, Sampler};
use projdim_core::semigroup::rauzy::{default_epsilon, rauzy_gamma_system};
use projdim_core::semigroup::LevelTables;

fn kernels(c: &mut Criterion) {
    let sys = rauzy_gamma_system(3, &default_epsilon()).unwrap();
    let serial = ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let pools = [
        ("serial", &serial),
        ("parallel", &ThreadPoolBuilder::new().build().unwrap()),
    ];

    let mut g = c.benchmark_group("level_tables_depth4");
    g.sample_size(10);
    for (name, pool) in pools {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| LevelTables::build(black_box(&sys), 4).unwrap()))
        });
    }
    g.finish();

    let mut g = c.benchmark_group("chaos_game_200k");
    g.sample_size(10);
    for (name, pool) in pools {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                pool.install(|| {
                    attractor_points(&sys, Sampler::ChaosGame, 200_000, Coords::SimplexS, 0)
                        .unwrap()
                })
            })
        });
    }
    g.finish();

    let mut g = c.benchmark_group("lyapunov_1e5");
    g.sample_size(10);
    for (name, pool) in pools {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| lyapunov_exponents(&sys, 100_000, 0).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, kernels);
criterion_main!(benches);
