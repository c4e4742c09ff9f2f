use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use equitable::forest::forest_equitable_color;
use equitable::generators::complete_bipartite;
use equitable::hs::equitable_color_hs;
use equitable::oracle::{decide_equitable, SearchBudget};
use equitable::ore::equitable_color_ore;
use equitable_bench::{forest_instance, hs_instance, ore_instance};

fn hs(c: &mut Criterion) {
    let mut group = c.benchmark_group("hs");
    group.sample_size(10);
    for n in [250, 500, 1000, 2000] {
        let (g, k) = hs_instance(n, 10, 0);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| equitable_color_hs(black_box(g), k).unwrap())
        });
    }
    group.finish();
}

fn ore(c: &mut Criterion) {
    let mut group = c.benchmark_group("ore");
    for n in [60, 120, 240] {
        let (g, k) = ore_instance(n, 6, 0);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| equitable_color_ore(black_box(g), k).unwrap())
        });
    }
    group.finish();
}

fn forest(c: &mut Criterion) {
    let mut group = c.benchmark_group("forest");
    for n in [100, 1000, 10000] {
        let (g, k) = forest_instance(n, 0);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| forest_equitable_color(black_box(g), k).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let g = complete_bipartite(5, 5);
    c.bench_function("oracle/K55@5", |b| {
        b.iter(|| decide_equitable(black_box(&g), 5, SearchBudget::unlimited()).unwrap())
    });
}

criterion_group!(benches, hs, ore, forest, oracle);
criterion_main!(benches);
