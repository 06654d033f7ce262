use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ercd_core::oplib::{centralizer_dimension, span_rank};
use ercd_core::reps::Basis;
use ercd_core::structure::{check_so8, classify_hermiticity, structure_constants};

fn exact_ops(c: &mut Criterion) {
    let b = Basis::standard();
    let x = b.extended(5);
    let y = b.extended(6);
    c.bench_function("compose", |bn| bn.iter(|| black_box(&x).compose(black_box(&y))));
    c.bench_function("adjoint", |bn| bn.iter(|| black_box(&x).adjoint()));
    c.bench_function("realify", |bn| bn.iter(|| ercd_core::oplib::realify(black_box(&x))));
}

fn spans(c: &mut Criterion) {
    let b = Basis::standard();
    let ercd = b.ercd64();
    let ig0 = b.i_gamma0();
    c.bench_function("span_rank ercd64", |bn| bn.iter(|| span_rank(black_box(&ercd).ops())));
    c.bench_function("hermiticity ercd64", |bn| {
        bn.iter(|| classify_hermiticity(black_box(&ercd)))
    });
    c.bench_function("centralizer iγ0", |bn| {
        bn.iter(|| centralizer_dimension(black_box(&ig0)))
    });
}

fn tables(c: &mut Criterion) {
    let b = Basis::standard();
    let family = b.so8_family();
    let percd = b.percd29();
    let mut g = c.benchmark_group("tables");
    g.sample_size(10);
    g.bench_function("so8 relations", |bn| bn.iter(|| check_so8(black_box(&family))));
    g.bench_function("percd29 structure constants", |bn| {
        bn.iter(|| structure_constants(black_box(&percd)))
    });
    g.finish();
}

criterion_group!(benches, exact_ops, spans, tables);
criterion_main!(benches);
