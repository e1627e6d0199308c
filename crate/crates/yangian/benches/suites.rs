//! Benchmarks comparing the data-parallel suite runner against the
//! sequential fallback on representative workloads.
//!
//! Run with `cargo bench -p yangian`; build with `--no-default-features`
//! to benchmark the purely sequential build (both functions then take the
//! same path).

use criterion::{criterion_group, criterion_main, Criterion};

use yangian::rootdata::AlgebraId;
use yangian::verify::{run_suite_mode, Config, Suite};

fn bench_defining(c: &mut Criterion) {
    let mut cfg = Config::new(AlgebraId::FiniteA(3), Suite::Defining);
    cfg.rmax = 3;
    let mut group = c.benchmark_group("defining_sl4_rmax3");
    group.sample_size(10);
    group.bench_function("sequential", |b| b.iter(|| run_suite_mode(&cfg, false)));
    group.bench_function("parallel", |b| b.iter(|| run_suite_mode(&cfg, true)));
    group.finish();
}

fn bench_lie_affine(c: &mut Criterion) {
    let mut cfg = Config::new(AlgebraId::AffineA(2), Suite::Lie);
    cfg.depth = 3;
    let mut group = c.benchmark_group("lie_a2affine_depth3");
    group.sample_size(10);
    group.bench_function("sequential", |b| b.iter(|| run_suite_mode(&cfg, false)));
    group.bench_function("parallel", |b| b.iter(|| run_suite_mode(&cfg, true)));
    group.finish();
}

criterion_group!(benches, bench_defining, bench_lie_affine);
criterion_main!(benches);
