use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use pgstar_core::corpus::random_corpus;
use pgstar_core::{analyze, cycle_graph, h_polynomial, independence_polynomial, path_graph};

fn families(c: &mut Criterion) {
    let mut group = c.benchmark_group("independence_polynomial");
    for n in [20, 40, 80] {
        let cycle = cycle_graph(n).unwrap();
        group.bench_with_input(BenchmarkId::new("cycle", n), &cycle, |b, g| {
            b.iter(|| independence_polynomial(black_box(g)))
        });
        let path = path_graph(n);
        group.bench_with_input(BenchmarkId::new("path", n), &path, |b, g| {
            b.iter(|| independence_polynomial(black_box(g)))
        });
    }
    group.finish();
}

fn random_graphs(c: &mut Criterion) {
    let mut group = c.benchmark_group("random");
    for n in [16, 24, 32] {
        let graphs = random_corpus(11, 9, n, n);
        group.bench_with_input(BenchmarkId::new("analyze", n), &graphs, |b, gs| {
            b.iter(|| {
                gs.iter()
                    .map(|g| analyze(black_box(g)).alpha)
                    .sum::<usize>()
            })
        });
    }
    group.finish();
}

fn h_transform(c: &mut Criterion) {
    let p = independence_polynomial(&path_graph(200));
    let alpha = p.degree().unwrap();
    c.bench_function("h_polynomial/path200", |b| {
        b.iter(|| h_polynomial(black_box(&p), alpha).unwrap())
    });
}

criterion_group!(benches, families, random_graphs, h_transform);
criterion_main!(benches);
