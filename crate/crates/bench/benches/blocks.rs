use std::hint::black_box;

use brauer_blocks::blocks::{block_key_int, dot_orbit, enumerate_block_members, DEFAULT_RANK_CAP};
use brauer_blocks::rational::int;
use brauer_blocks::{central_character, enumerate_partitions, Partition};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn block_keys(c: &mut Criterion) {
    let mut group = c.benchmark_group("block_key");
    for max in [6, 10, 14] {
        let labels = enumerate_partitions(max);
        group.bench_with_input(BenchmarkId::from_parameter(max), &labels, |b, labels| {
            b.iter(|| {
                for l in labels {
                    black_box(block_key_int(l, 2));
                }
            })
        });
    }
    group.finish();
}

fn central_characters(c: &mut Criterion) {
    let labels = enumerate_partitions(8);
    let delta = int(3);
    c.bench_function("central_character/size<=8", |b| {
        b.iter(|| {
            for l in &labels {
                black_box(central_character(l, &delta));
            }
        })
    });
}

fn dot_orbits(c: &mut Criterion) {
    let mut group = c.benchmark_group("dot_orbit");
    group.sample_size(10);
    let lambda = Partition::new(vec![3, 1]).unwrap();
    for n in [4, 5, 6] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| black_box(dot_orbit(&lambda, n, 1, DEFAULT_RANK_CAP).unwrap().len()))
        });
    }
    group.finish();
}

fn block_members(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_block_members");
    group.sample_size(10);
    let empty = Partition::empty();
    for max in [12, 18] {
        group.bench_with_input(BenchmarkId::from_parameter(max), &max, |b, &max| {
            b.iter(|| black_box(enumerate_block_members(&empty, &int(2), max)))
        });
    }
    group.finish();
}

criterion_group!(benches, block_keys, central_characters, dot_orbits, block_members);
criterion_main!(benches);
