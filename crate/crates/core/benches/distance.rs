use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ccring::consta::ConstaFamily;
use ccring::enumerate::WeightKernel;
use ccring::field::FieldCtx;
use ccring::ring::ChainRing;

/// Kernels for constacyclic codes of length 20 over F_3[u]/<u^2>.
fn kernels() -> Vec<(usize, WeightKernel)> {
    let base = ChainRing::new(std::sync::Arc::new(FieldCtx::prime(3).unwrap()), 2).unwrap();
    let fam = ConstaFamily::new(base.clone(), 1, 10, base.one()).unwrap();
    let mut out = Vec::new();
    for target in [8, 10, 12] {
        let exps = fam.all_exponents().find(|e| fam.formula_log_size(e) == target).unwrap();
        let space = fam.code(&exps).unwrap().space;
        let kernel = WeightKernel::new(space.field(), space.len(), space.depth(), space.basis());
        out.push((target, kernel));
    }
    out
}

fn min_weight(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_weight");
    group.sample_size(10);
    for (log_size, kernel) in kernels() {
        group.bench_with_input(BenchmarkId::new("sequential", log_size), &kernel, |b, k| {
            b.iter(|| black_box(k.min_weight_sequential()))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", log_size), &kernel, |b, k| {
            b.iter(|| black_box(k.min_weight_parallel()))
        });
    }
    group.finish();
}

criterion_group!(benches, min_weight);
criterion_main!(benches);
