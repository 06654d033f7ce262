use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ercd_core::momsym::{fw_transform, sample_momenta, tilde_gammas, MomentumSymbol, Sign};
use ercd_core::poincare::{build_poincare_generators, check_generator_symmetries, poincare_closure_check};
use ercd_core::reps::Basis;

fn fw(c: &mut Criterion) {
    let b = Basis::standard();
    let qs = sample_momenta(200, 42, 10.0);
    let vp = fw_transform(&b, 1.0, Sign::Plus).unwrap();
    let vm = fw_transform(&b, 1.0, Sign::Minus).unwrap();
    let id = MomentumSymbol::identity();
    c.bench_function("V+V- over 200 momenta", |bn| {
        bn.iter(|| vp.compose(&vm).max_distance(black_box(&id), black_box(&qs)))
    });
    let tilde = tilde_gammas(&b, 1.0).unwrap();
    let (x, y) = (&tilde.elements[0].1, &tilde.elements[4].1);
    c.bench_function("tilde anticommutator at one momentum", |bn| {
        bn.iter(|| x.anticommutator(y).at(black_box([1.0, -2.0, 0.5])))
    });
}

fn poincare(c: &mut Criterion) {
    let b = Basis::standard();
    let qs = sample_momenta(50, 42, 10.0);
    let gens = build_poincare_generators(&b, 1.0).unwrap();
    let mut g = c.benchmark_group("poincare");
    g.sample_size(10);
    g.bench_function("generator symmetries, 50 momenta", |bn| {
        bn.iter(|| check_generator_symmetries(&b, black_box(&gens), 1.0, &qs, 1e-10))
    });
    g.bench_function("closure fit, 50 momenta", |bn| {
        bn.iter(|| poincare_closure_check(black_box(&gens), &qs, 1e-8))
    });
    g.finish();
}

criterion_group!(benches, fw, poincare);
criterion_main!(benches);
