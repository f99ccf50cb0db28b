use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use kr_soliton::sweep::{self, Mode};
use kr_soliton::verify::{rmatrix_pairs_suite, two_soliton, Config};
use kr_soliton::Algebra;

fn modes() -> [(&'static str, Mode); 2] {
    [("parallel", Mode::Parallel), ("sequential", Mode::Sequential)]
}

fn scattering(c: &mut Criterion) {
    let mut g = c.benchmark_group("two-soliton sweep");
    g.sample_size(10);
    for desc in ["C1:3", "D1:5"] {
        let alg: Algebra = desc.parse().unwrap();
        for (name, mode) in modes() {
            g.bench_with_input(BenchmarkId::new(name, desc), &alg, |b, &alg| {
                b.iter(|| black_box(sweep::run(mode, 1, 200, |_, rng| two_soliton(alg, rng).is_ok())))
            });
        }
    }
    g.finish();
}

fn rmatrix(c: &mut Criterion) {
    let mut g = c.benchmark_group("R-matrix exhaustive pairs");
    g.sample_size(10);
    let alg: Algebra = "B1:3".parse().unwrap();
    for (name, mode) in modes() {
        let cfg = Config { seed: 1, mode };
        g.bench_function(name, |b| b.iter(|| black_box(rmatrix_pairs_suite(&cfg, alg).cases)));
    }
    g.finish();
}

criterion_group!(benches, scattering, rmatrix);
criterion_main!(benches);
