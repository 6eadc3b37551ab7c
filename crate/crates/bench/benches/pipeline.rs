use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use regmatch::{construct, decompose, exists_good_maximum_matching, fixture, maximum_matching};
use regmatch_bench::{deficient_inputs, random_input};

fn matching_engine(c: &mut Criterion) {
    let mut group = c.benchmark_group("maximum_matching");
    for n in [50, 100, 200] {
        let g = random_input(n, 3, true);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| maximum_matching(black_box(g)))
        });
    }
    group.finish();
}

fn decomposition(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose");
    for n in [20, 50, 100] {
        let g = random_input(n, 5, false);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| decompose(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn pipelines(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct");
    for (name, g) in deficient_inputs(2) {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| construct(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let g = fixture("qt4").unwrap();
    c.bench_function("oracle/qt4", |b| {
        b.iter(|| exists_good_maximum_matching(black_box(&g)).unwrap())
    });
}

criterion_group!(benches, matching_engine, decomposition, pipelines, oracle);
criterion_main!(benches);
