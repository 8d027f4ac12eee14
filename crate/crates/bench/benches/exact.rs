use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rattet_bench::sample_angles;
use rattet_core::exact::CyclotomicNumber;

fn cosines(c: &mut Criterion) {
    let angles = sample_angles();
    c.bench_function("cos_pi", |b| {
        b.iter(|| angles.iter().map(|&a| CyclotomicNumber::cos_pi(black_box(a))).collect::<Vec<_>>())
    });
    // residual-like sums with a nonzero value exercise interval refinement
    let sums: Vec<CyclotomicNumber> = angles
        .windows(3)
        .map(|w| w.iter().map(|&a| CyclotomicNumber::cos_pi(a)).sum())
        .collect();
    c.bench_function("is_zero", |b| b.iter(|| sums.iter().filter(|x| black_box(x).is_zero()).count()));
    c.bench_function("sign", |b| b.iter(|| sums.iter().map(|x| black_box(x).sign().unwrap()).sum::<i8>()));
}

criterion_group!(benches, cosines);
criterion_main!(benches);
