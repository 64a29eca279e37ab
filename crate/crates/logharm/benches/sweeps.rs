//! Parallel vs sequential sweeps on the two hot paths: the σ circle scan that
//! drives every radius search, and quadrature-heavy curve sampling.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use logharm::analytic::{AnalyticFunction, Dilatation};
use logharm::geometry;
use logharm::map::LogharmonicMap;

fn cst_extremal(alpha: f64) -> LogharmonicMap {
    let base =
        LogharmonicMap::from_representation(AnalyticFunction::koebe(alpha), Dilatation::zero())
            .unwrap();
    LogharmonicMap::close_to_starlike(&base, AnalyticFunction::half_plane_p()).unwrap()
}

fn f0_with_a_z() -> LogharmonicMap {
    let dil = Dilatation::new(AnalyticFunction::identity()).unwrap();
    LogharmonicMap::from_representation(AnalyticFunction::koebe(0.0), dil).unwrap()
}

fn bench_circle_scan(c: &mut Criterion) {
    let map = cst_extremal(0.25);
    let n = 4096;
    let mut group = c.benchmark_group("min_sigma_on_circle");
    group.bench_function("parallel", |b| {
        b.iter(|| geometry::min_sigma_on_circle(black_box(&map), 0.4, n).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| geometry::min_sigma_on_circle_seq(black_box(&map), 0.4, n).unwrap())
    });
    group.finish();
}

fn bench_image_curve(c: &mut Criterion) {
    let map = f0_with_a_z();
    let n = 128;
    let mut group = c.benchmark_group("image_curve_quadrature");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter_batched(
            || map.clone(),
            |m| geometry::image_curve(&m, 0.5, n).unwrap(),
            BatchSize::SmallInput,
        )
    });
    group.bench_function("sequential", |b| {
        b.iter_batched(
            || map.clone(),
            |m| geometry::image_curve_seq(&m, 0.5, n).unwrap(),
            BatchSize::SmallInput,
        )
    });
    group.finish();
}

criterion_group!(benches, bench_circle_scan, bench_image_curve);
criterion_main!(benches);
