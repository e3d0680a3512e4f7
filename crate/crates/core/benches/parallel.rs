//! Rayon paths against their sequential twins on the same inputs.
//!
//! Build with `--no-default-features` to route the rayon entry points through
//! the sequential fallback as well.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;

use rigidplane::verify::{
    bezout_audit, bezout_audit_seq, normal_crossings_report, normal_crossings_report_seq,
    singular_locus_oracle, singular_locus_oracle_seq, verify_batch, verify_batch_seq,
};
use rigidplane::{Certificate, Config, HomForm, Monomial, ProjPoint, Strategy};

fn construction(targets: &[(i64, i64, i64)]) -> Config {
    let mut cfg = Config::init_quadrilateral();
    for &(x, y, z) in targets {
        cfg.construct_point(&ProjPoint::new(x, y, z).unwrap(), Strategy::AdditionChain)
            .unwrap();
    }
    cfg
}

fn with_conic() -> Config {
    let conic = HomForm::new(
        2,
        [((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), -1)]
            .map(|((i, j, k), c)| (Monomial::new(i, j, k), BigInt::from(c))),
    )
    .unwrap();
    let points = [(3, 4, 5), (4, 3, 5), (0, 1, 1), (1, 0, 1), (-3, 4, 5)]
        .map(|(x, y, z)| ProjPoint::new(x, y, z).unwrap());
    let mut cfg = construction(&[(7, 3, 1), (-5, 11, 2)]);
    cfg.embed_curve(&conic, &points, Strategy::AdditionChain)
        .unwrap();
    cfg
}

fn bench(c: &mut Criterion) {
    let lines = construction(&[(37, 21, 1), (-13, 8, 5), (101, -64, 9)]);
    let curved = with_conic();

    let mut g = c.benchmark_group("oracle");
    g.bench_with_input(
        BenchmarkId::new("par", lines.lines().len()),
        &lines,
        |b, cfg| b.iter(|| singular_locus_oracle(cfg)),
    );
    g.bench_with_input(
        BenchmarkId::new("seq", lines.lines().len()),
        &lines,
        |b, cfg| b.iter(|| singular_locus_oracle_seq(cfg)),
    );
    g.finish();

    let mut g = c.benchmark_group("bezout");
    g.sample_size(20);
    g.bench_function("par", |b| b.iter(|| bezout_audit(&curved).unwrap()));
    g.bench_function("seq", |b| b.iter(|| bezout_audit_seq(&curved).unwrap()));
    g.finish();

    let mut g = c.benchmark_group("normal_crossings");
    g.sample_size(20);
    g.bench_function("par", |b| b.iter(|| normal_crossings_report(&curved)));
    g.bench_function("seq", |b| b.iter(|| normal_crossings_report_seq(&curved)));
    g.finish();

    let certs: Vec<Certificate> = (1..=16i64)
        .map(|k| {
            Certificate::from_config(
                &construction(&[(3 * k, -k * k, 2 * k + 1)]),
                Some(Strategy::AdditionChain),
            )
        })
        .collect();
    let mut g = c.benchmark_group("verify_batch");
    g.sample_size(20);
    g.bench_function("par", |b| b.iter(|| verify_batch(&certs)));
    g.bench_function("seq", |b| b.iter(|| verify_batch_seq(&certs)));
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
