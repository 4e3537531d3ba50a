//! Sequential versus parallel execution on the three fan-out points:
//! strong cover scans, perfect matching enumeration, and whole campaigns.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wog::exec::Exec;
use wog::matching;
use wog::oracle::{self, CampaignConfig, Family, InstanceConfig};

fn bench_instance(n: usize) -> wog::WeightedOrientedGraph {
    let cfg = InstanceConfig {
        n,
        edge_density: 0.35,
        weight_prob: 0.5,
        family: Family::Whisker,
    };
    oracle::random_instance(&cfg, 17).unwrap()
}

fn modes() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn strong_covers(c: &mut Criterion) {
    let d = bench_instance(20);
    let mut group = c.benchmark_group("strong_covers_n20");
    for (label, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(label), &exec, |b, &exec| {
            b.iter(|| oracle::unmixed_by_strong_covers_with(&d, 24, exec).unwrap())
        });
    }
    group.finish();
}

fn perfect_matchings(c: &mut Criterion) {
    let d = bench_instance(20);
    let g = d.underlying();
    let mut group = c.benchmark_group("perfect_matchings_n20");
    for (label, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(label), &exec, |b, &exec| {
            b.iter(|| matching::enumerate_perfect_matchings_with(&g, 24, exec).unwrap())
        });
    }
    group.finish();
}

fn campaign(c: &mut Criterion) {
    let cfg = CampaignConfig {
        family: Family::Whisker,
        count: 24,
        base_seed: 99,
        max_n: 10,
        bound: 24,
    };
    let mut group = c.benchmark_group("campaign_whisker_24");
    group.sample_size(10);
    for (label, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(label), &exec, |b, &exec| {
            b.iter(|| oracle::run_campaign_with(&cfg, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, strong_covers, perfect_matchings, campaign);
criterion_main!(benches);
