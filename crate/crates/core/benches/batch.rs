use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use reye_core::nodes::find_nodes;
use reye_core::projective::RandomConfig;
use reye_core::reye::sample_reye_lines;
use reye_core::web::{generate_web, genericity_check};
use reye_core::Exec;
use std::hint::black_box;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn batches(c: &mut Criterion) {
    let (w, _) = generate_web(1, RandomConfig::default(), Exec::Parallel).expect("generic web");

    let mut g = c.benchmark_group("find_nodes");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| find_nodes(black_box(&w), 1, e).unwrap())
        });
    }
    g.finish();

    let mut g = c.benchmark_group("sample_reye_lines_64");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| sample_reye_lines(black_box(&w), 1, 64, e).unwrap())
        });
    }
    g.finish();

    let mut g = c.benchmark_group("genericity_check");
    g.sample_size(20);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| genericity_check(black_box(&w), 1, e))
        });
    }
    g.finish();
}

criterion_group!(benches, batches);
criterion_main!(benches);
