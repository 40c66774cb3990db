use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use curvecount::graph::{catalog, catalog_names, ForestMethod};
use curvecount::homology::cks_stalk_class;
use curvecount::invariants::{hilbert_vertex_class, jacobian_class, perverse_series, perverse_vertex_class};
use curvecount::verify::{run_suite, SuiteOptions};
use curvecount_bench::{banana, complete};

fn series(c: &mut Criterion) {
    let mut group = c.benchmark_group("perverse_series");
    for k in [3, 6, 9] {
        let g = banana(k);
        group.bench_with_input(BenchmarkId::new("banana", k), &g, |b, g| b.iter(|| perverse_series(black_box(g)).unwrap()));
    }
    let k5 = complete(5);
    group.bench_function("complete-5", |b| b.iter(|| perverse_series(black_box(&k5)).unwrap()));
    group.finish();
}

fn brute_force(c: &mut Criterion) {
    let mut group = c.benchmark_group("cks_stalk_class");
    group.sample_size(10);
    for k in [3, 4, 5] {
        let g = banana(k);
        group.bench_with_input(BenchmarkId::new("banana", k), &g, |b, g| b.iter(|| cks_stalk_class(black_box(g)).unwrap()));
    }
    let k4 = complete(4);
    group.bench_function("complete-4", |b| b.iter(|| cks_stalk_class(black_box(&k4)).unwrap()));
    group.finish();
}

fn vertex_classes(c: &mut Criterion) {
    let k5 = complete(5);
    c.bench_function("hilbert_vertex_class/complete-5", |b| b.iter(|| hilbert_vertex_class(black_box(&k5)).unwrap()));
    c.bench_function("exp_perverse/complete-5", |b| {
        b.iter(|| perverse_vertex_class(black_box(&k5)).unwrap().exp().unwrap())
    });
}

fn complexity(c: &mut Criterion) {
    let k5 = complete(5);
    let mut group = c.benchmark_group("spanning_forest_count/complete-5");
    group.bench_function("matrix-tree", |b| b.iter(|| k5.spanning_forest_count(ForestMethod::MatrixTree).unwrap()));
    group.bench_function("matroid", |b| b.iter(|| k5.spanning_forest_count(ForestMethod::Matroid).unwrap()));
    group.finish();
    c.bench_function("jacobian_class/complete-5", |b| b.iter(|| jacobian_class(black_box(&k5)).unwrap()));
}

fn suite(c: &mut Criterion) {
    let graphs: Vec<_> = catalog_names().iter().map(|&n| (n.to_string(), catalog(n).unwrap())).collect();
    let names = vec!["subsum".to_string(), "severi".to_string(), "nodalhilb".to_string()];
    let mut group = c.benchmark_group("run_suite");
    group.sample_size(10);
    group.bench_function("catalog", |b| b.iter(|| run_suite(&graphs, &names, &SuiteOptions::default()).unwrap()));
    group.finish();
}

criterion_group!(benches, series, brute_force, vertex_classes, complexity, suite);
criterion_main!(benches);
