use criterion::{black_box, criterion_group, criterion_main, Criterion};

use fracsh::decomposition::{expand, main_sum, search_splits, Scheme, SearchConfig};
use fracsh::Rational;

fn bench_canonical_expand(c: &mut Criterion) {
    let half = Rational::new(1, 2);
    c.bench_function("expand_canonical_depth6", |b| {
        b.iter(|| {
            let tree = expand(black_box(half), 6, Scheme::Canonical).unwrap();
            main_sum(&tree, 6).unwrap()
        })
    });
}

fn bench_search(c: &mut Criterion) {
    let cfg = SearchConfig::default();
    c.bench_function("search_splits_half_bound50", |b| {
        b.iter(|| search_splits(black_box(Rational::new(1, 2)), &cfg).unwrap())
    });
    let wide = SearchConfig {
        denominator_bound: 200,
        ..SearchConfig::default()
    };
    c.bench_function("search_splits_half_bound200", |b| {
        b.iter(|| search_splits(black_box(Rational::new(1, 2)), &wide).unwrap())
    });
}

criterion_group!(benches, bench_canonical_expand, bench_search);
criterion_main!(benches);
