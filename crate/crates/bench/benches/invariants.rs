use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use nilgraph::graph::{class_one_certificate, min_dominating_set};
use nilgraph::{build_graph, NilCleanProfile};
use nilgraph_bench::{ring, FIXTURES};

fn graph_construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_graph");
    for spec in FIXTURES {
        let r = ring(spec);
        group.bench_with_input(BenchmarkId::from_parameter(spec), &r, |b, r| {
            b.iter(|| build_graph(black_box(r)))
        });
    }
    group.finish();
}

fn profile(c: &mut Criterion) {
    let mut group = c.benchmark_group("nilclean_profile");
    for spec in FIXTURES {
        let r = ring(spec);
        group.bench_with_input(BenchmarkId::from_parameter(spec), &r, |b, r| {
            b.iter(|| NilCleanProfile::compute(black_box(r)))
        });
    }
    group.finish();
}

fn metrics(c: &mut Criterion) {
    let mut group = c.benchmark_group("metrics");
    for spec in FIXTURES {
        let r = ring(spec);
        let g = build_graph(&r);
        group.bench_function(BenchmarkId::new("girth", spec), |b| {
            b.iter(|| black_box(&g).girth())
        });
        group.bench_function(BenchmarkId::new("diameter", spec), |b| {
            b.iter(|| black_box(&g).diameter())
        });
    }
    group.finish();
}

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("searches");
    group.sample_size(10);
    for spec in ["Z199", "GF(7,3)", "Z4xGF(2,2)"] {
        let r = ring(spec);
        let g = build_graph(&r);
        group.bench_function(BenchmarkId::new("dominating", spec), |b| {
            b.iter(|| min_dominating_set(black_box(&g), 512).unwrap())
        });
        group.bench_function(BenchmarkId::new("class_one", spec), |b| {
            b.iter(|| class_one_certificate(black_box(&g), 2_000_000))
        });
    }
    group.finish();
}

criterion_group!(benches, graph_construction, profile, metrics, searches);
criterion_main!(benches);
