use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ocn_bench::{sparse_graph, windowed_cover};
use ocn_core::distfit::fit_all;
use ocn_core::metrics::{diameter, hop_distribution, ClusteringProfile, HopMode};
use ocn_core::oracle::SizeLaw;
use ocn_core::project::project;

fn projection(c: &mut Criterion) {
    let law = SizeLaw::PowerLaw { alpha: 2.5, min: 3, max: 500 };
    let mut group = c.benchmark_group("project");
    for &communities in &[5_000usize, 20_000] {
        let cover = windowed_cover(100_000, communities, &law, 200, 7);
        group.bench_with_input(BenchmarkId::from_parameter(communities), &cover, |b, cover| {
            b.iter(|| project(cover, 1).unwrap())
        });
    }
    group.finish();
}

fn metrics(c: &mut Criterion) {
    let g = sparse_graph(50_000, 200_000, 3);
    let mut group = c.benchmark_group("metrics");
    group.sample_size(10);
    group.bench_function("triangles", |b| b.iter(|| ClusteringProfile::compute(&g)));
    group.bench_function("hops_sampled_200", |b| {
        b.iter(|| hop_distribution(&g, HopMode::Sampled { sources: 200, seed: 1 }).unwrap())
    });
    group.bench_function("diameter", |b| b.iter(|| diameter(&g).unwrap()));
    group.finish();
}

fn fitting(c: &mut Criterion) {
    let g = sparse_graph(50_000, 200_000, 5);
    let sample = ocn_core::metrics::degree_histogram(&g).to_sample();
    c.bench_function("fit_all_degrees", |b| b.iter(|| fit_all(&sample)));
}

criterion_group!(benches, projection, metrics, fitting);
criterion_main!(benches);
