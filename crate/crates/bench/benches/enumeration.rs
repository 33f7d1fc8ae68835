use std::hint::black_box;

use chordgenus::oracle::{one_backbone_histogram, oracle_two_backbone, OracleConfig};
use chordgenus::perm::Matchings;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn matchings(c: &mut Criterion) {
    let mut group = c.benchmark_group("matchings");
    for n in [5, 6, 7] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| {
                let mut stream = Matchings::new(n);
                let mut count = 0u64;
                while let Some(m) = stream.advance() {
                    black_box(m);
                    count += 1;
                }
                count
            })
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for n in [5, 6] {
        group.bench_with_input(BenchmarkId::new("one_backbone", n), &n, |b, &n| {
            b.iter(|| one_backbone_histogram(black_box(n)))
        });
        group.bench_with_input(BenchmarkId::new("two_backbones", n), &n, |b, &n| {
            b.iter(|| oracle_two_backbone(black_box(n), &OracleConfig::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, matchings, oracle);
criterion_main!(benches);
