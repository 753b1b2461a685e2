//! Benchmarks of the hot paths: category construction, enumeration,
//! quiver extraction and the classify/reconstruct round trip.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use cluscat::{
    classify, ct_quiver, enumerate_ct, reconstruct, relations, CategorySpec, ClusterCategory,
    Family, GabrielOracle, MutationAtlas, Quiver,
};

fn build(family: Family, rank: u32) -> ClusterCategory {
    ClusterCategory::build(CategorySpec::new(family, rank).unwrap()).unwrap()
}

fn bench_build(c: &mut Criterion) {
    c.bench_function("build_a8", |b| b.iter(|| build(Family::A, 8)));
    c.bench_function("build_d6", |b| b.iter(|| build(Family::D, 6)));
}

fn bench_enumerate(c: &mut Criterion) {
    let a8 = build(Family::A, 8);
    let d6 = build(Family::D, 6);
    c.bench_function("enumerate_a8", |b| b.iter(|| enumerate_ct(&a8)));
    c.bench_function("enumerate_d6", |b| b.iter(|| enumerate_ct(&d6)));
}

fn bench_quivers(c: &mut Criterion) {
    let d5 = build(Family::D, 5);
    let objects = enumerate_ct(&d5);
    c.bench_function("gabriel_oracle_d5", |b| {
        b.iter_batched(
            || GabrielOracle::new(&d5),
            |gab| {
                for t in &objects {
                    gab.quiver(t.summands()).unwrap();
                }
            },
            BatchSize::PerIteration,
        )
    });
    c.bench_function("mutation_atlas_d5", |b| b.iter(|| MutationAtlas::build(&d5).unwrap()));
    c.bench_function("ct_quiver_with_relations_d5", |b| {
        b.iter(|| {
            for t in &objects {
                relations(&ct_quiver(&d5, t).unwrap()).unwrap();
            }
        })
    });
}

fn bench_reconstruct(c: &mut Criterion) {
    let square = Quiver::from_arrows(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    c.bench_function("classify_four_cycle", |b| b.iter(|| classify(&square).unwrap()));
    c.bench_function("reconstruct_four_cycle", |b| b.iter(|| reconstruct(&square).unwrap()));
}

criterion_group!(benches, bench_build, bench_enumerate, bench_quivers, bench_reconstruct);
criterion_main!(benches);
