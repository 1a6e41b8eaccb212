//! Parallel-vs-sequential comparison for the data-parallel inner loops:
//! symbolic partition functions, tableau sums and a small verify sweep.
//!
//! Build with the default `parallel` feature; the sequential numbers come
//! from the runtime override, so both paths are measured in one run.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ice_schur::combinatorics::Partition;
use ice_schur::exec;
use ice_schur::lattice::{partition_function, LatticeSystem, TParam};
use ice_schur::schur::{schur_det, schur_tableau};
use ice_schur::verify::{run_suite, Suite, SuiteConfig};

fn modes() -> Vec<(&'static str, bool)> {
    if cfg!(feature = "parallel") {
        vec![("parallel", false), ("sequential", true)]
    } else {
        vec![("sequential", true)]
    }
}

fn bench_partition_function(c: &mut Criterion) {
    let lambda = Partition::new(vec![3, 2, 1]).unwrap();
    let system = LatticeSystem::gamma(&lambda, 3, TParam::Symbolic).unwrap();
    let mut group = c.benchmark_group("partition-function");
    for (name, sequential) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &system, |b, system| {
            exec::set_sequential(sequential);
            b.iter(|| partition_function(system).unwrap());
            exec::set_sequential(false);
        });
    }
    group.finish();
}

fn bench_tableau_sum(c: &mut Criterion) {
    let lambda = Partition::new(vec![3, 2, 1]).unwrap();
    let mut group = c.benchmark_group("tableau-sum");
    for (name, sequential) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &lambda, |b, lambda| {
            exec::set_sequential(sequential);
            b.iter(|| schur_tableau(lambda, 4).unwrap());
            exec::set_sequential(false);
        });
    }
    group.finish();
}

fn bench_alternant_ratio(c: &mut Criterion) {
    let lambda = Partition::new(vec![3, 1]).unwrap();
    let mut group = c.benchmark_group("alternant-ratio");
    for (name, sequential) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &lambda, |b, lambda| {
            exec::set_sequential(sequential);
            b.iter(|| schur_det(lambda, 4).unwrap());
            exec::set_sequential(false);
        });
    }
    group.finish();
}

fn bench_suite_sweep(c: &mut Criterion) {
    let config = SuiteConfig {
        suite: Suite::Tokuyama,
        max_n: 2,
        max_part: 2,
        perturb: None,
    };
    let mut group = c.benchmark_group("suite-tokuyama");
    group.sample_size(10);
    for (name, sequential) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &config, |b, config| {
            exec::set_sequential(sequential);
            b.iter(|| run_suite(config).unwrap());
            exec::set_sequential(false);
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_partition_function,
    bench_tableau_sum,
    bench_alternant_ratio,
    bench_suite_sweep
);
criterion_main!(benches);
