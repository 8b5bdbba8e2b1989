use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use classunion::catalog::GroupSpecifier;
use classunion::class_union::m_invariant;
use classunion::classes::decompose;
use classunion::landau::{landau_solutions, LandauConfig};
use classunion::report::{default_catalog_entries, run_verification, VerifyOptions};
use classunion::Execution;

fn modes() -> Vec<(&'static str, Execution)> {
    let mut modes = vec![("sequential", Execution::Sequential)];
    #[cfg(feature = "parallel")]
    modes.push(("parallel", Execution::Parallel));
    modes
}

fn bench_m_invariant(c: &mut Criterion) {
    let mut group = c.benchmark_group("m_invariant");
    for spec in ["S4", "A5", "E2^4", "D8"] {
        let g = GroupSpecifier::parse(spec).unwrap().build().unwrap();
        let dec = decompose(&g);
        for (mode, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(mode, spec), &exec, |b, &exec| {
                b.iter(|| m_invariant(black_box(&g), &dec, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_catalog(c: &mut Criterion) {
    let entries = default_catalog_entries();
    let mut group = c.benchmark_group("verify_catalog");
    group.sample_size(20);
    for (mode, execution) in modes() {
        group.bench_function(mode, |b| {
            b.iter(|| run_verification(black_box(&entries), &VerifyOptions { execution }))
        });
    }
    group.finish();
}

fn bench_landau(c: &mut Criterion) {
    let mut group = c.benchmark_group("landau_solutions");
    group.sample_size(20);
    for k in [5, 6] {
        for (mode, execution) in modes() {
            let cfg = LandauConfig {
                execution,
                ..LandauConfig::default()
            };
            group.bench_with_input(BenchmarkId::new(mode, k), &k, |b, &k| {
                b.iter(|| landau_solutions(black_box(k), &cfg).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_m_invariant, bench_catalog, bench_landau);
criterion_main!(benches);
