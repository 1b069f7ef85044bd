use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use qaudit_core::audit::{run_audit, AuditOptions, Selection};
use qaudit_core::bernoulli::{beta_order, carlitz_betas};
use qaudit_core::padic::{
    volkenborn, volkenborn_multi, IntegrandSpec, IntegrationConfig, Measure, MultiMethod, PadicQ,
};
use qaudit_core::qcore::gauss_binom;
use qaudit_core::stirling::{stirling1_row, stirling2_s};

fn exact(c: &mut Criterion) {
    let mut g = c.benchmark_group("exact");
    for n in [10i64, 20, 40] {
        g.bench_with_input(BenchmarkId::new("gauss_binom", n), &n, |b, &n| {
            b.iter(|| gauss_binom(black_box(n), n / 2))
        });
    }
    g.bench_function("stirling1_row/20", |b| {
        b.iter(|| stirling1_row(black_box(20)))
    });
    g.bench_function("stirling2_s/12,6", |b| {
        b.iter(|| stirling2_s(black_box(12), 6))
    });
    g.bench_function("carlitz_betas/10", |b| {
        b.iter(|| carlitz_betas(black_box(10)))
    });
    g.bench_function("beta_order/6,3,1", |b| {
        b.iter(|| beta_order(black_box(6), 3, 1))
    });
    g.finish();
}

fn padic(c: &mut Criterion) {
    let cfg = IntegrationConfig::default();
    let q = PadicQ::from_offset(5, 1).unwrap();
    let mut g = c.benchmark_group("padic");
    for level in [4u32, 6] {
        g.bench_with_input(BenchmarkId::new("powq3", level), &level, |b, &n| {
            b.iter(|| volkenborn(&IntegrandSpec::PowQ(3), &q, n, Measure::Bosonic, &cfg).unwrap())
        });
    }
    let q3 = PadicQ::from_offset(3, 1).unwrap();
    let f = IntegrandSpec::MultiEulerPow { n: 2, k: 3, x: 1 };
    for method in [MultiMethod::Direct, MultiMethod::Factorized] {
        g.bench_function(format!("eulerpow2/{method:?}"), |b| {
            b.iter(|| volkenborn_multi(&f, &q3, 3, Measure::Fermionic, method, &cfg).unwrap())
        });
    }
    g.finish();
}

fn audit(c: &mut Criterion) {
    let sel = Selection::parse("EQ03-PARTITION,EQ21,THM3");
    c.bench_function("audit/small", |b| {
        b.iter(|| run_audit(&sel, &AuditOptions::default()).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = exact, padic, audit
}
criterion_main!(benches);
