//! Sequential against rayon fan-out on the heavier suites.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qgr::suites::run_suite;
use qgr::Exec;

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    for (suite, n) in [("cocycle", 1000), ("kappa-ranks", 500), ("positivity", 2000), ("conjecture", 1000)] {
        for (label, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
            group.bench_with_input(BenchmarkId::new(suite, label), &n, |b, &n| {
                b.iter(|| run_suite(suite, n, 42, exec).expect("suite runs"))
            });
        }
    }
    group.finish();
}

fn window_products(c: &mut Criterion) {
    use qgr::chartab::CharTable;
    use qgr::suites::a1_window;
    use qgr::{cartan::parse_type, Lattice};

    let table = CharTable::builtin(Lattice::new(parse_type("A1").unwrap()).unwrap());
    let window = a1_window();
    let simples: Vec<_> = window.iter().map(|g| table.simple_char(g).unwrap()).collect();
    let mut group = c.benchmark_group("window_products");
    group.sample_size(10);
    for (label, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
        group.bench_function(label, |b| {
            b.iter(|| exec.map_slice(&simples, |s| s.mul(table.lattice(), &simples[0]).unwrap().len()))
        });
    }
    group.finish();
}

criterion_group!(benches, suites, window_products);
criterion_main!(benches);
