//! End-to-end pipeline benchmarks: free-product arithmetic, transport to
//! the central ring, identity certificates, and Gröbner-based membership.

use criterion::{criterion_group, criterion_main, Criterion};

use quapoly::sample;
use quapoly::{
    buchberger, gpi_certificate, to_central, verify_certificate, Algebra, FreePoly, GpiGenerators,
    Ideal, ScalarPoly,
};

fn q() -> Algebra {
    Algebra::quaternion()
}

fn bench_free_product_mul(c: &mut Criterion) {
    let mut rng = sample::rng(1001);
    let a = sample::freepoly(&mut rng, &q(), 2, 3, 8, 9);
    let b = sample::freepoly(&mut rng, &q(), 2, 3, 8, 9);
    c.bench_function("free_product_mul_deg3", |bch| bch.iter(|| &a * &b));
}

fn bench_to_central(c: &mut Criterion) {
    let mut rng = sample::rng(1002);
    let p = sample::freepoly(&mut rng, &q(), 2, 4, 8, 9);
    c.bench_function("to_central_deg4", |bch| bch.iter(|| to_central(&p)));
}

fn bench_certificate(c: &mut Criterion) {
    let gens = GpiGenerators::new(q(), 1);
    let mut rng = sample::rng(1003);
    let p = loop {
        let p = sample::kernel_element(&mut rng, &gens, 3, 4);
        if !p.is_zero() {
            break p;
        }
    };
    c.bench_function("gpi_certificate_build_and_verify", |bch| {
        bch.iter(|| {
            let cert = gpi_certificate(&gens, &p).expect("kernel element");
            assert!(verify_certificate(&gens, &cert));
        })
    });
}

fn bench_ideal_membership(c: &mut Criterion) {
    let x1 = FreePoly::variable(q(), 1, 0).unwrap();
    let i = FreePoly::constant(
        q(),
        1,
        &quapoly::AlgebraElement::new(
            [0i64, 1, 0, 0].map(quapoly::rational::rat_int).to_vec(),
        ),
    );
    let gen = &x1 - &i;
    c.bench_function("ideal_build_x_minus_i", |bch| {
        bch.iter(|| Ideal::new(q(), 1, vec![gen.clone()]).unwrap())
    });
    let ideal = Ideal::new(q(), 1, vec![gen.clone()]).unwrap();
    let f = &(&x1 * &x1) + &FreePoly::one(q(), 1);
    c.bench_function("ideal_member_square_plus_one", |bch| {
        bch.iter(|| assert!(ideal.member(&f).unwrap()))
    });
}

fn bench_buchberger(c: &mut Criterion) {
    let mut rng = sample::rng(1004);
    let gens: Vec<ScalarPoly> = (0..3).map(|_| sample::scalarpoly(&mut rng, 3, 3, 3, 5)).collect();
    c.bench_function("buchberger_three_gens", |bch| bch.iter(|| buchberger(&gens)));
}

criterion_group! {
    name = pipelines;
    config = Criterion::default().sample_size(20);
    targets = bench_free_product_mul,
              bench_to_central,
              bench_certificate,
              bench_ideal_membership,
              bench_buchberger
}
criterion_main!(pipelines);
