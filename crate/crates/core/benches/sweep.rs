use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use goldman::harness::{self, Check, SweepConfig};
use goldman::Alphabet;

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("counting_q2_len7");
    group.sample_size(10);
    let cfg = SweepConfig::new(Alphabet::new(2).unwrap(), 7).with_checks([Check::Counting]);
    // 0 = one worker per core; without the `parallel` feature both run sequentially
    for workers in [1, 0] {
        let cfg = cfg.clone().with_workers(workers);
        let label = if workers == 1 { "sequential" } else { "parallel" };
        group.bench_with_input(BenchmarkId::from_parameter(label), &cfg, |b, cfg| {
            b.iter(|| harness::run(black_box(cfg)).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("sign_class_const_q2_len4");
    group.sample_size(10);
    let mut cfg = SweepConfig::new(Alphabet::new(2).unwrap(), 4).with_checks([Check::SignClassConst]);
    cfg.class_len = 4;
    for workers in [1, 0] {
        let cfg = cfg.clone().with_workers(workers);
        let label = if workers == 1 { "sequential" } else { "parallel" };
        group.bench_with_input(BenchmarkId::from_parameter(label), &cfg, |b, cfg| {
            b.iter(|| harness::run(black_box(cfg)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
