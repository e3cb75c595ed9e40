use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;

use skew_core::catalog::from_spec;
use skew_core::random;
use skew_core::selftest::{self, SelftestConfig};
use skew_core::{Element, Exec};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn dense(p: &skew_core::Presentation, seed: u64) -> Element {
    let mut rng = random::SampleRng::seed_from_u64(seed);
    random::element(&mut rng, p, 4, 40, p.nvars())
}

fn element_products(c: &mut Criterion) {
    let mut group = c.benchmark_group("mul_with");
    for spec in ["qmat3", "kn3"] {
        let p = from_spec(spec).unwrap();
        let (a, b) = (dense(&p, 1), dense(&p, 2));
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, spec), &exec, |bench, &exec| {
                bench.iter(|| {
                    // cold caches, so both modes pay for the same expansions
                    p.clear_caches();
                    black_box(p.mul_with(&a, &b, exec).unwrap())
                })
            });
        }
    }
    group.finish();
}

fn series_products(c: &mut Criterion) {
    let mut group = c.benchmark_group("ts_mul_with");
    let p = from_spec("qmat3").unwrap();
    let mut rng = random::SampleRng::seed_from_u64(3);
    let f = random::series(&mut rng, &p, 8, 30, p.nvars(), true);
    let g = random::series(&mut rng, &p, 8, 30, p.nvars(), true);
    for (mode, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(mode, "qmat3/order8"), &exec, |bench, &exec| {
            bench.iter(|| {
                p.clear_caches();
                black_box(p.ts_mul_with(&f, &g, exec).unwrap())
            })
        });
    }
    group.finish();
}

fn property_batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("selftest_associativity");
    group.sample_size(10);
    for (mode, exec) in MODES {
        let cfg = SelftestConfig { exec, ..SelftestConfig::default() };
        group.bench_function(mode, |bench| bench.iter(|| black_box(selftest::associativity(&cfg))));
    }
    group.finish();
}

criterion_group!(benches, element_products, series_products, property_batch);
criterion_main!(benches);
