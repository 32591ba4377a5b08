use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dedekind_core::dedekind::{dedekind_sum, franel_integral, reciprocity_lhs};
use dedekind_core::lattice::hj_generators;
use dedekind_core::zeta::{bernoulli_recip_r2, multiple_zeta_trunc, ZetaVariant};
use dedekind_core::{NuVector, PeriodicFn, QVector, TruncationPlan};

fn nu(v: &[u64]) -> NuVector {
    NuVector::new(v.to_vec()).unwrap()
}

fn sums(c: &mut Criterion) {
    let mut g = c.benchmark_group("dedekind_sum");
    for m in [101u64, 1009, 10007] {
        let v = nu(&[3, 7, m]);
        let f = vec![
            PeriodicFn::Bernoulli(1),
            PeriodicFn::Bernoulli(2),
            PeriodicFn::Bernoulli(1),
        ];
        g.bench_with_input(BenchmarkId::from_parameter(m), &v, |b, v| {
            b.iter(|| dedekind_sum(black_box(&f), v, 2).unwrap())
        });
    }
    g.finish();
    let b1 = vec![PeriodicFn::Bernoulli(1); 3];
    let v = nu(&[97, 101, 103]);
    c.bench_function("reciprocity_lhs/97,101,103", |b| {
        b.iter(|| reciprocity_lhs(black_box(&b1), &v).unwrap())
    });
    c.bench_function("trig_sum/cos", |b| {
        let f = vec![PeriodicFn::Cos; 3];
        b.iter(|| dedekind_sum(black_box(&f), &v, 0).unwrap())
    });
}

fn integrals(c: &mut Criterion) {
    c.bench_function("franel/2,3,5,7", |b| {
        b.iter(|| franel_integral(black_box(&[2, 1, 3, 2]), black_box(&[2, 3, 5, 7])).unwrap())
    });
}

fn fans(c: &mut Criterion) {
    let v = nu(&[89, 144, 233]);
    c.bench_function("hj_generators/fibonacci", |b| {
        b.iter(|| hj_generators(black_box(&v), 0).unwrap())
    });
}

fn zeta(c: &mut Criterion) {
    let mut g = c.benchmark_group("multiple_zeta_trunc");
    g.sample_size(10);
    let v = nu(&[2, 3, 5]);
    let q = QVector::new(vec![2, 2, 2]).unwrap();
    for n in [100u64, 400] {
        let plan = TruncationPlan::new(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &plan, |b, plan| {
            b.iter(|| multiple_zeta_trunc(&v, &q, 0, ZetaVariant::Full, plan).unwrap())
        });
    }
    g.finish();
    let mut g = c.benchmark_group("bernoulli_recip_r2");
    g.sample_size(10);
    let q = QVector::new(vec![1, 2, 2]).unwrap();
    let plan = TruncationPlan::new(300);
    g.bench_function("2,3,5/N=300", |b| {
        b.iter(|| bernoulli_recip_r2(&v, &q, &plan).unwrap())
    });
    g.finish();
}

criterion_group!(benches, sums, integrals, fans, zeta);
criterion_main!(benches);
