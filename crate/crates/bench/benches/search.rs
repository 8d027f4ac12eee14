use criterion::{criterion_group, criterion_main, Criterion};
use rattet_core::families::{builtin_families, verify_identity};
use rattet_core::search::{run_sporadic_search, DenominatorProfile, SearchConfig};

fn search(c: &mut Criterion) {
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    for (name, profile) in [("l0_only", DenominatorProfile::l0_only()), ("per_length", DenominatorProfile::per_length())] {
        let cfg = SearchConfig { profile, ..SearchConfig::default() };
        g.bench_function(name, |b| b.iter(|| run_sporadic_search(&cfg).sporadic_after_family_filter.len()));
    }
    g.finish();
}

fn families(c: &mut Criterion) {
    let fams = builtin_families();
    let mut g = c.benchmark_group("families");
    g.sample_size(10);
    g.bench_function("verify_identities", |b| b.iter(|| fams.iter().filter(|f| verify_identity(f).is_ok()).count()));
    g.finish();
}

criterion_group!(benches, search, families);
criterion_main!(benches);
