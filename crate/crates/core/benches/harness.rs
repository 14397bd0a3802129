use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use theta_core::complex::generators::{example_5_4_ball, simplex};
use theta_core::harness::{run_suite, Suite, SuiteConfig};
use theta_core::invariants::RestrictionTable;
use theta_core::par::Exec;
use theta_core::subdivision::{antiprism, barycentric};
use theta_core::FieldChoice;

const MODES: [(&str, Exec); 2] = [("parallel", Exec::Parallel), ("sequential", Exec::Sequential)];

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    for suite in [Suite::Locality, Suite::Conjectures] {
        for (name, exec) in MODES {
            let config = SuiteConfig {
                suite,
                max_dim: 2,
                generated: 4,
                exec,
                ..SuiteConfig::default()
            };
            group.bench_with_input(BenchmarkId::new(suite.to_string(), name), &config, |b, config| {
                b.iter(|| black_box(run_suite(config).unwrap()))
            });
        }
    }
    group.finish();
}

fn restriction_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("restriction_table");
    group.sample_size(10);
    let cases = [("antiprism(simplex(4))", antiprism(&simplex(4))), ("sd(example_5_4)", barycentric(&example_5_4_ball()))];
    for (label, t) in &cases {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(*label, name), t, |b, t| {
                b.iter(|| exec.install(|| black_box(RestrictionTable::new(t, FieldChoice::Rational).unwrap())))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, suites, restriction_tables);
criterion_main!(benches);
