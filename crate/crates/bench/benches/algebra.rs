use std::hint::black_box;

use chordgenus::one_backbone::{pg_via_ode, pg_via_series};
use chordgenus::two_backbone::c2_count;
use chordgenus::young::mn_character_in_order;
use chordgenus::{CycleType, YoungDiagram};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn characters(c: &mut Criterion) {
    // Unmemoized, so every iteration does the full rim-hook recursion.
    let shape = YoungDiagram::new(&[4, 3, 2, 1]).unwrap();
    let class = CycleType::matching(5).parts();
    c.bench_function("mn_character (4,3,2,1) on [2^5]", |b| {
        b.iter(|| mn_character_in_order(black_box(&shape), black_box(&class)).unwrap())
    });
}

fn numerators(c: &mut Criterion) {
    let mut group = c.benchmark_group("p_g");
    for g in [3, 6] {
        group.bench_with_input(BenchmarkId::new("ode", g), &g, |b, &g| {
            b.iter(|| pg_via_ode(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("series", g), &g, |b, &g| {
            b.iter(|| pg_via_series(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn coefficients(c: &mut Criterion) {
    let mut group = c.benchmark_group("c2_count");
    for (g, n) in [(1, 100), (2, 400), (6, 400)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("g{g}_n{n}")),
            &(g, n),
            |b, &(g, n)| b.iter(|| c2_count(black_box(g), black_box(n)).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, characters, numerators, coefficients);
criterion_main!(benches);
