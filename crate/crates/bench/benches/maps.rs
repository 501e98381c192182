use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use unipotent_bench::{classes, context, unipotents};
use unipotent_core::atlas::build_atlas;
use unipotent_core::oracle::{verify_orthogonal_minimizer, verify_theorem_0_2};
use unipotent_core::{phi, psi, CharVariant, Family};

fn maps(c: &mut Criterion) {
    for (family, variant) in [
        (Family::C, CharVariant::Good),
        (Family::D, CharVariant::Good),
        (Family::D, CharVariant::P2),
    ] {
        let ctx = context(family, 10, variant);
        let cls = classes(&ctx);
        let us = unipotents(&ctx);
        c.bench_function(&format!("phi over {ctx}"), |b| {
            b.iter(|| {
                cls.iter().for_each(|x| {
                    black_box(phi(&ctx, black_box(x)).unwrap());
                })
            })
        });
        c.bench_function(&format!("psi over {ctx}"), |b| {
            b.iter(|| {
                us.iter().for_each(|u| {
                    black_box(psi(&ctx, black_box(u)).unwrap());
                })
            })
        });
    }
}

fn oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracles");
    group.sample_size(10);
    let d8 = context(Family::D, 8, CharVariant::P2);
    group.bench_function("fiber scan D_8 p2", |b| {
        b.iter(|| verify_theorem_0_2(&d8, 12).unwrap())
    });
    group.bench_function("orthogonal splittings up to 20", |b| {
        b.iter(|| verify_orthogonal_minimizer(20))
    });
    let e8 = context(Family::E8, 8, CharVariant::P2);
    group.bench_function("atlas E8 p2", |b| b.iter(|| build_atlas(&e8).unwrap()));
    group.finish();
}

criterion_group!(benches, maps, oracles);
criterion_main!(benches);
