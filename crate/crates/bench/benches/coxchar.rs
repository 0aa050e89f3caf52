use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use coxchar_core::weyl::standard_coxeter_word;
use coxchar_core::{
    cox_table, epsilon_sum_check, fourier, fourier_matrix, seminormal_rep, trace_word, Partition,
    WeylType,
};

fn tables(c: &mut Criterion) {
    let e8: WeylType = "E8".parse().unwrap();
    c.bench_function("cox_table E8", |b| b.iter(|| cox_table(black_box(e8))));
    c.bench_function("epsilon sums up to rank 12", |b| {
        b.iter(|| {
            WeylType::all_up_to_rank(12)
                .into_iter()
                .all(|t| epsilon_sum_check(t).ok)
        })
    });
}

fn oracle(c: &mut Criterion) {
    let lambda = Partition::new(vec![3, 2, 1]);
    let word = standard_coxeter_word(WeylType::a(5).unwrap());
    c.bench_function("seminormal (3,2,1) build", |b| {
        b.iter(|| seminormal_rep(black_box(&lambda), 5).unwrap())
    });
    let rep = seminormal_rep(&lambda, 5).unwrap();
    c.bench_function("seminormal (3,2,1) Coxeter trace", |b| {
        b.iter(|| trace_word(black_box(&rep), &word).unwrap())
    });
}

fn fourier_bench(c: &mut Criterion) {
    let s3 = fourier::symmetric3();
    c.bench_function("fourier matrix S3", |b| {
        b.iter(|| fourier_matrix(black_box(&s3)))
    });
}

criterion_group!(benches, tables, oracle, fourier_bench);
criterion_main!(benches);
