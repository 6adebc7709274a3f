//! Parallel vs sequential throughput on the counting kernels.
//!
//! `jobs = 1` always takes the sequential code path; higher values route
//! through the rayon pool when the `parallel` feature (default) is on, and
//! fall back to sequential otherwise, so the suite runs under both builds.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use digraph_stats::census::census_with_jobs;
use digraph_stats::cig::generate_g_beta;
use digraph_stats::families::layered_tournaments;
use digraph_stats::path4::count_squares_with_jobs;
use digraph_stats::search::verify_thomasse;

fn bench_census(c: &mut Criterion) {
    let g = generate_g_beta(1024, 300).unwrap().to_digraph();
    let mut group = c.benchmark_group("census_gbeta_n1024");
    for jobs in [1usize, 2, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(jobs), &jobs, |b, &jobs| {
            b.iter(|| census_with_jobs(&g, jobs).unwrap());
        });
    }
    group.finish();
}

fn bench_squares(c: &mut Criterion) {
    let g = layered_tournaments(256).unwrap();
    let mut group = c.benchmark_group("squares_layered_n256");
    for jobs in [1usize, 2, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(jobs), &jobs, |b, &jobs| {
            b.iter(|| count_squares_with_jobs(&g, jobs).unwrap());
        });
    }
    group.finish();
}

fn bench_thomasse_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_thomasse_n4");
    group.sample_size(20);
    for jobs in [1usize, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(jobs), &jobs, |b, &jobs| {
            b.iter(|| verify_thomasse(4, jobs).unwrap());
        });
    }
    group.finish();
}

criterion_group!(benches, bench_census, bench_squares, bench_thomasse_sweep);
criterion_main!(benches);
