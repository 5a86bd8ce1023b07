use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use sgt_core::verify::{self, Construction};
use sgt_core::*;

fn full_t3() -> FiniteSemigroup {
    let gens = [vec![1, 2, 0], vec![1, 0, 2], vec![0, 0, 2]]
        .into_iter()
        .map(|g| Transformation::new(g).unwrap())
        .collect::<Vec<_>>();
    from_transformations(3, &gens).unwrap().semigroup
}

fn full_t4() -> FiniteSemigroup {
    let gens = [vec![1, 2, 3, 0], vec![1, 0, 2, 3], vec![0, 0, 2, 3]]
        .into_iter()
        .map(|g| Transformation::new(g).unwrap())
        .collect::<Vec<_>>();
    from_transformations(4, &gens).unwrap().semigroup
}

fn congruences(c: &mut Criterion) {
    let t4 = full_t4();
    let pairs: PairSet = [(0, 5), (17, 100)].into_iter().collect();
    c.bench_function("rc_generate T4", |b| {
        b.iter(|| rc_generate(black_box(&t4), black_box(&pairs), false))
    });
    c.bench_function("rc_generate two-sided T4", |b| {
        b.iter(|| rc_generate(black_box(&t4), black_box(&pairs), true))
    });

    let t3 = full_t3();
    let x: PairSet = [(0, 1)].into_iter().collect();
    c.bench_function("rc_diameter T3", |b| {
        b.iter(|| rc_diameter(black_box(&t3), black_box(&x)))
    });
    c.bench_function("enumerate R4", |b| {
        let r4 = library::right_zero(4);
        b.iter(|| enumerate_right_congruences(black_box(&r4), None).unwrap())
    });
    c.bench_function("enumerate T2xZ2", |b| {
        let s = FiniteSemigroup::direct_product(&library::t2(), &library::cyclic_group(2));
        b.iter(|| enumerate_right_congruences(black_box(&s), None).unwrap())
    });
    let rho = rc_generate(&t3, &x, false);
    c.bench_function("minimal_generating_pairs T3", |b| {
        b.iter(|| minimal_generating_pairs(black_box(&t3), black_box(&rho), DEFAULT_EXACT_LIMIT))
    });
}

fn structure(c: &mut Criterion) {
    c.bench_function("from_transformations T4", |b| b.iter(full_t4));
    let t4 = full_t4();
    c.bench_function("green_data T4", |b| b.iter(|| green_data(black_box(&t4))));
    c.bench_function("schutzenberger T4 identity", |b| {
        let id = t4.identity().unwrap();
        b.iter(|| schutzenberger(black_box(&t4), id).unwrap())
    });
    let r = ReesStructure::new(
        library::cyclic_group(3),
        3,
        3,
        vec![
            vec![SandwichEntry::Group(0); 3],
            vec![
                SandwichEntry::Group(0),
                SandwichEntry::Group(1),
                SandwichEntry::Group(2),
            ],
            vec![
                SandwichEntry::Group(0),
                SandwichEntry::Group(2),
                SandwichEntry::Group(1),
            ],
        ],
        false,
    )
    .unwrap();
    let s = rees_construct(&r).unwrap().semigroup;
    c.bench_function("rees_coordinates 27", |b| {
        b.iter(|| rees_coordinates(black_box(&s)).unwrap())
    });
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("fg library", |b| {
        b.iter(|| verify::sweep(Construction::Fg, 5, 3))
    });
    group.bench_function("dp monoids", |b| {
        b.iter(|| verify::sweep(Construction::Dp, 5, 3))
    });
    group.finish();
}

criterion_group!(benches, congruences, structure, verification);
criterion_main!(benches);
