use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use stabletwist_core::mcg::generator_series;
use stabletwist_core::partition::enumerate_partitions;
use stabletwist_core::setpart::{enumerate_set_partitions, perm_character, LabelAlphabet};
use stabletwist_core::stablecohom::{build_table, GroupFamily};
use stabletwist_core::symfunc::{compute_plethysm_h_h, nu_infinity_from_identity};
use stabletwist_core::{Partition, SurfaceVariant};

fn set_partitions(c: &mut Criterion) {
    let mut group = c.benchmark_group("set_partitions");
    for q in [6, 8, 10] {
        group.bench_with_input(BenchmarkId::new("enumerate", q), &q, |b, &q| {
            b.iter(|| enumerate_set_partitions(black_box(q), false).unwrap().len())
        });
        group.bench_with_input(BenchmarkId::new("perm_character", q), &q, |b, &q| {
            b.iter(|| perm_character(black_box(q), &LabelAlphabet::trivial(), 0).unwrap())
        });
    }
    group.finish();
}

fn plethysm(c: &mut Criterion) {
    let mut group = c.benchmark_group("plethysm");
    group.sample_size(10);
    for (k, l) in [(3, 3), (4, 4), (6, 6), (12, 3), (18, 2)] {
        group.bench_with_input(BenchmarkId::new("h_k[h_l]", format!("{k}x{l}")), &(k, l), |b, &(k, l)| {
            b.iter(|| compute_plethysm_h_h(black_box(k), black_box(l)).unwrap())
        });
    }
    group.bench_function("stable_identity/[3,3,3]", |b| {
        let mu: Partition = "[3,3,3]".parse().unwrap();
        b.iter(|| nu_infinity_from_identity(black_box(&mu)).unwrap())
    });
    group.finish();
}

fn tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("tables");
    group.sample_size(10);
    // Memos are warm after the first iteration; this tracks the steady state.
    for g in [GroupFamily::AutF, GroupFamily::OutF] {
        group.bench_function(format!("{g}/max_weight_8"), |b| b.iter(|| build_table(g, 8).unwrap()));
    }
    group.finish();
}

fn mapping_class(c: &mut Criterion) {
    let mut group = c.benchmark_group("mcg");
    group.sample_size(10);
    for lambda in enumerate_partitions(6).into_iter().step_by(3) {
        group.bench_with_input(BenchmarkId::new("closed_deg40", &lambda), &lambda, |b, lambda| {
            b.iter(|| generator_series(SurfaceVariant::Closed, lambda, 40).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, set_partitions, plethysm, tables, mapping_class);
criterion_main!(benches);
