//! Sequential vs rayon execution of the batch-parallel paths.
//!
//! Build with `--no-default-features` to see the fallback: both variants
//! then run on one thread.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::rngs::StdRng;
use rand::SeedableRng;

use reeb_core::random::{generic_graph, random_diagram};
use reeb_core::smoothing::smooth_with;
use reeb_core::transport::bottleneck_with;
use reeb_core::{extended_diagram, Exec, DEFAULT_TOL};

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn batch_diagrams(c: &mut Criterion) {
    let mut rng = StdRng::seed_from_u64(1);
    let graphs: Vec<_> = (0..512).map(|_| generic_graph(&mut rng, 5)).collect();
    let mut group = c.benchmark_group("batch_diagrams");
    for (name, exec) in STRATEGIES {
        group.bench_function(name, |b| {
            b.iter(|| exec.map(black_box(&graphs), |g| extended_diagram(g).unwrap()))
        });
    }
    group.finish();
}

fn smoothing(c: &mut Criterion) {
    let mut group = c.benchmark_group("smooth");
    for ops in [20usize, 80] {
        let g = generic_graph(&mut StdRng::seed_from_u64(ops as u64), ops);
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, ops), &g, |b, g| {
                b.iter(|| smooth_with(g, 0.37, DEFAULT_TOL, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bottleneck(c: &mut Criterion) {
    let mut rng = StdRng::seed_from_u64(2);
    let pairs: Vec<_> = (0..4)
        .map(|_| (random_diagram(&mut rng, 40), random_diagram(&mut rng, 40)))
        .collect();
    let mut group = c.benchmark_group("bottleneck");
    for (name, exec) in STRATEGIES {
        group.bench_function(name, |b| {
            b.iter(|| {
                pairs
                    .iter()
                    .map(|(x, y)| bottleneck_with(x, y, exec).distance)
                    .fold(0.0, f64::max)
            })
        });
    }
    group.finish();
}

criterion_group!(benches, batch_diagrams, smoothing, bottleneck);
criterion_main!(benches);
