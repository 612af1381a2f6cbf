use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use twining::genera::{phi_g_ell, verify_eta_identity};
use twining::modforms::{eta, theta_quotient, ThetaQuotientKind};
use twining::oracle::{brute_genera, SpinLift};
use twining::series::Q_GRID;
use twining::sigma::verify_sigma_isomorphism;
use twining::{ClassData, DSign, GenusRequest};

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    for orders in [5, 10, 20] {
        let p = orders * Q_GRID;
        g.bench_with_input(BenchmarkId::new("eta_inverse", orders), &p, |b, &p| {
            b.iter(|| eta(black_box(p)).invert().unwrap())
        });
        g.bench_with_input(BenchmarkId::new("theta1_sq", orders), &p, |b, &p| {
            b.iter(|| theta_quotient(ThetaQuotientKind::Theta1Sq, black_box(p)))
        });
    }
    g.finish();
}

fn genera(c: &mut Criterion) {
    let data = ClassData::bundled().unwrap();
    let mut g = c.benchmark_group("genera");
    g.sample_size(20);
    for (class, ell) in [("4D", 2), ("2C", 3), ("1A", 7)] {
        let rec = data.get(class).unwrap();
        let req = GenusRequest::new(rec, DSign::Plus, ell, 5 * Q_GRID).unwrap();
        g.bench_function(format!("phi {class} l={ell}"), |b| b.iter(|| phi_g_ell(black_box(&req)).unwrap()));
    }
    g.bench_function("eta identity, all rows, 8 orders", |b| {
        b.iter(|| data.rows_for(2).map(|r| verify_eta_identity(r, 8 * Q_GRID)).filter(|r| r.passed()).count())
    });
    g.finish();
}

fn oracles(c: &mut Criterion) {
    let data = ClassData::bundled().unwrap();
    let mut g = c.benchmark_group("oracles");
    g.sample_size(10);
    let lift = SpinLift::normalized(data.get("2B").unwrap(), 2, DSign::Plus).unwrap();
    g.bench_function("brute traces 2B degree 1", |b| b.iter(|| brute_genera(black_box(&lift), 1).unwrap()));
    g.bench_function("sigma identities 6 orders", |b| b.iter(|| verify_sigma_isomorphism(6 * Q_GRID).unwrap()));
    g.finish();
}

criterion_group!(benches, series, genera, oracles);
criterion_main!(benches);
