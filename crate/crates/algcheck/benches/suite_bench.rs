//! Criterion benches comparing the data-parallel runner against the
//! sequential fallback on the two suites with the most independent tasks,
//! plus a blade-product microbench.

use std::path::PathBuf;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use algcheck::clifford::{blade_mul, Blade};
use algcheck::registry::Registry;
use algcheck::runner::{run_suite, SuiteContext};

fn context() -> Arc<SuiteContext> {
    let fixtures = PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"));
    Arc::new(SuiteContext {
        constants_path: fixtures.join("codata2014.json"),
        fixtures_dir: fixtures,
        registry: Arc::new(Registry::new(None)),
        seed: 0xA1C0DE,
        fixture_filter: None,
    })
}

fn bench_suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    for suite in ["clifford", "klein"] {
        group.bench_function(format!("{suite}-parallel"), |b| {
            b.iter(|| {
                let report = run_suite(suite, &context(), true).unwrap();
                assert_eq!(report.fail_count(), 0);
            })
        });
        group.bench_function(format!("{suite}-sequential"), |b| {
            b.iter(|| {
                let report = run_suite(suite, &context(), false).unwrap();
                assert_eq!(report.fail_count(), 0);
            })
        });
    }
    group.finish();
}

fn bench_blades(c: &mut Criterion) {
    c.bench_function("blade-products-64x64", |b| {
        b.iter(|| {
            let mut acc = 0i32;
            for x in Blade::all() {
                for y in Blade::all() {
                    let (s, blade) = blade_mul(x, y);
                    acc += s as i32 * blade.index() as i32;
                }
            }
            acc
        })
    });
}

criterion_group!(benches, bench_suites, bench_blades);
criterion_main!(benches);
