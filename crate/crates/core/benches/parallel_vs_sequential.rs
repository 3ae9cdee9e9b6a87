//! Sequential against rayon execution on the three data-parallel hot spots:
//! the per-multidegree Betti loop, cover enumeration and the batch suite.
//!
//! Without the `parallel` feature both arms run the sequential path.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use homshift::config::{Config, Exec};
use homshift::corpus;
use homshift::covers::{cover_ideal, minimal_vertex_covers};
use homshift::graph::{CliqueWhiskeredGraph, Graph};
use homshift::pipelines::{batch_suite, Mode};
use homshift::resolution::betti_table;
use std::hint::black_box;

const EXECS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn cfg(exec: Exec) -> Config {
    Config {
        exec,
        ..Config::default()
    }
}

fn betti(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti_table");
    for k in [2, 3] {
        let g = CliqueWhiskeredGraph::whiskered_cycle(k).unwrap();
        let j = cover_ideal(g.graph(), &Config::default()).unwrap();
        for (name, exec) in EXECS {
            group.bench_with_input(BenchmarkId::new(name, format!("J(G_{k})")), &j, |b, j| {
                b.iter(|| betti_table(black_box(j), &cfg(exec)).unwrap())
            });
        }
    }
    group.finish();
}

fn covers(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimal_vertex_covers");
    for n in [16, 22] {
        let g = Graph::cycle(n).unwrap();
        for (name, exec) in EXECS {
            group.bench_with_input(BenchmarkId::new(name, format!("C_{n}")), &g, |b, g| {
                b.iter(|| minimal_vertex_covers(black_box(g), &cfg(exec)).unwrap())
            });
        }
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("batch_suite");
    group.sample_size(10);
    let instances = corpus::seeded_corpus(corpus::DEFAULT_SEED, 24, &Config::default()).unwrap();
    for (name, exec) in EXECS {
        group.bench_function(BenchmarkId::new(name, "corpus-24"), |b| {
            b.iter(|| {
                let reports = batch_suite(instances.clone(), Mode::Generic, &cfg(exec));
                assert!(reports.iter().all(|r| r.as_ref().is_ok_and(|r| r.passed())));
                reports
            })
        });
    }
    group.finish();
}

criterion_group!(benches, betti, covers, suite);
criterion_main!(benches);
