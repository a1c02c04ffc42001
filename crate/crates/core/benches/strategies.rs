//! Sequential against rayon-parallel execution on the independent work items.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qduality::duality;
use qduality::qfunctions::{tables, TableKind};
use qduality::sergeev::theta_image_rank;
use qduality::Strategy;

const STRATEGIES: [Strategy; 2] = [Strategy::Sequential, Strategy::Parallel];

fn char_tables(c: &mut Criterion) {
    let ks: Vec<usize> = (1..=10).collect();
    let mut group = c.benchmark_group("phi tables k=1..10");
    group.sample_size(10);
    for s in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{s:?}")), &s, |b, &s| {
            b.iter(|| tables(&ks, TableKind::Phi, s))
        });
    }
    group.finish();
}

fn isomorphism(c: &mut Criterion) {
    let mut group = c.benchmark_group("theta image rank k=4");
    group.sample_size(10);
    for s in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{s:?}")), &s, |b, &s| {
            b.iter(|| theta_image_rank(4, s))
        });
    }
    group.finish();
}

fn duality_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify duality n=2 k=2");
    group.sample_size(10);
    for s in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{s:?}")), &s, |b, &s| {
            b.iter(|| duality::verify_duality(2, 2, s))
        });
    }
    group.finish();
}

criterion_group!(benches, char_tables, isomorphism, duality_pipeline);
criterion_main!(benches);
