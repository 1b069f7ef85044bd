//! Checks that compare two exact rational functions.

use super::{Counterexample, Grid, Outcome};
use crate::arith::{BigRat, QPoly, QRat};
use crate::bernoulli::{
    beta_neg_order, beta_neg_order_shifted_form, beta_order, beta_order_binomial_form,
    carlitz_beta, euler_neg_order, euler_neg_order_expanded, moment_bosonic, prop6_check,
    qfact_ratio,
};
use crate::classical::{bernoulli_numbers, stirling1_signed, stirling2};
use crate::padic::{IntegrandSpec, Measure};
use crate::qcore::{
    binom, binom_rat, choose2, delta_q, delta_q_operator, factorial, gauss_binom_partition_oracle,
    gauss_binom_rat, q_binom_product, q_binom_series, q_factorial, q_falling, q_int, Sign,
};
use crate::stirling::{stirling1, stirling1_closed, stirling2_c, stirling2_delta, stirling2_s};

/// Return a counterexample from the enclosing check when the sides differ.
macro_rules! ensure_eq {
    ($lhs:expr, $rhs:expr; $($name:ident),*) => {{
        let (l, r) = ($lhs, $rhs);
        if l != r {
            return Ok(Some(Counterexample::new(&[$((stringify!($name), $name as i64)),*], &l, &r)));
        }
    }};
}

fn qp(c: &[i64]) -> QRat {
    QRat::from_poly(QPoly::from_i64s(c))
}

fn q_minus_1() -> QRat {
    qp(&[-1, 1])
}

fn one_minus_q() -> QRat {
    qp(&[1, -1])
}

fn pw(x: &QRat, e: i64) -> QRat {
    x.pow(e as i32).expect("nonzero base")
}

fn gb(n: i64, k: i64) -> QRat {
    gauss_binom_rat(n, k)
}

fn qfact(n: i64) -> QRat {
    QRat::from_poly(q_factorial(n as u32))
}

fn int(c: i64) -> QRat {
    QRat::from_int(c)
}

fn big(c: &num_bigint::BigInt) -> QRat {
    QRat::from_bigrat(BigRat::from_integer(c.clone()))
}

fn alt(sign_exp: i64, t: QRat) -> QRat {
    if sign_exp.rem_euclid(2) == 1 {
        -t
    } else {
        t
    }
}

pub fn eq01_limit(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for k in 0..=n {
            let ratio = &qfact(n) / &(&qfact(k) * &qfact(n - k));
            ensure_eq!(gb(n, k), ratio; n, k);
            let lim = gb(n, k).limit_q1()?;
            ensure_eq!(lim, BigRat::from_integer(binom(n, k)); n, k);
        }
    }
    Ok(None)
}

pub fn eq02_form1(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for k in 0..=n + 1 {
            let rhs = &gb(n, k - 1) + &gb(n, k).mul_q_pow(k);
            ensure_eq!(gb(n + 1, k), rhs; n, k);
        }
    }
    Ok(None)
}

fn eq02_form2_with(g: &Grid, offset: i64) -> Outcome {
    for n in g.span("n") {
        for k in 0..=n + 1 {
            let rhs = &gb(n, k - 1).mul_q_pow(n - k + offset) + &gb(n, k);
            ensure_eq!(gb(n + 1, k), rhs; n, k);
        }
    }
    Ok(None)
}

pub fn eq02_form2_printed(g: &Grid) -> Outcome {
    eq02_form2_with(g, 0)
}

pub fn eq02_form2_corrected(g: &Grid) -> Outcome {
    eq02_form2_with(g, 1)
}

pub fn eq03_partition(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for k in 0..=n {
            let oracle = QRat::from_poly(gauss_binom_partition_oracle(n as u32, k as u32));
            ensure_eq!(gb(n, k), oracle; n, k);
        }
    }
    Ok(None)
}

pub fn carlitz_limit(g: &Grid) -> Outcome {
    let classical = bernoulli_numbers(g.hi("m").max(0) as u32);
    for m in g.span("m") {
        let lim = carlitz_beta(m as u32).limit_q1()?;
        ensure_eq!(lim, classical[m as usize].clone(); m);
    }
    Ok(None)
}

pub fn eq06(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for x in g.span("x") {
            ensure_eq!(q_int(x - n).mul_q_pow(n), &q_int(x) - &q_int(n); n, x);
            ensure_eq!(q_int(-x), -q_int(x).mul_q_pow(-x); n, x);
        }
    }
    Ok(None)
}

fn power_values(m: i64, upto: i64) -> Vec<QRat> {
    (0..=upto).map(|x| pw(&q_int(x), m)).collect()
}

pub fn eq07_eq09(g: &Grid) -> Outcome {
    for m in g.span("m") {
        for n in g.span("n") {
            let vals = power_values(m, n);
            ensure_eq!(delta_q_operator(n as u32, &vals)?, delta_q(n as u32, &vals)?; m, n);
        }
    }
    Ok(None)
}

pub fn eq08_newton(g: &Grid) -> Outcome {
    for m in g.span("m") {
        let vals = power_values(m, m + 2);
        for x in 0..=m + 2 {
            let rhs: QRat = (0..=x)
                .map(|n| {
                    let d = delta_q(n as u32, &vals[..=n as usize]).expect("arity");
                    &gb(x, n) * &d
                })
                .sum();
            ensure_eq!(vals[x as usize].clone(), rhs; m, x);
        }
    }
    Ok(None)
}

pub fn eq10_eq11(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for k in g.span("k") {
            ensure_eq!(stirling2_s(n as u32, k as u32), stirling2_delta(n as u32, k as u32); n, k);
        }
    }
    Ok(None)
}

/// `[x]^n = Σ_k binom(x,k)_q [k]_q! s q^{C(k,2)}` with `s` chosen by `reading`.
fn eq12_with(g: &Grid, reading: fn(i64, i64) -> QRat) -> Outcome {
    for n in g.span("n") {
        for x in 0..=n + 2 {
            let rhs: QRat = (0..=n)
                .map(|k| (&(&gb(x, k) * &qfact(k)) * &reading(n, k)).mul_q_pow(choose2(k)))
                .sum();
            ensure_eq!(pw(&q_int(x), n), rhs; n, x);
        }
    }
    Ok(None)
}

pub fn eq12_c2_reading(g: &Grid) -> Outcome {
    eq12_with(g, |n, k| stirling2_c(k as u32, (n - k) as u32))
}

pub fn eq12_printed(g: &Grid) -> Outcome {
    eq12_with(g, |n, k| stirling2_s(k as u32, (n - k) as u32))
}

/// `∫ binom(x,n)_q dμ_q` exactly, from the exponential expansion of the integrand.
pub fn gauss_binom_integral(n: i64) -> QRat {
    IntegrandSpec::GaussBinom(n as u32)
        .exp_poly()
        .integral(Measure::Bosonic)
}

pub fn eq13_corrected_value(n: i64) -> QRat {
    alt(n, q_int(n + 1).recip().expect("nonzero")).mul_q_pow(-choose2(n))
}

pub fn eq13_printed_value(n: i64) -> QRat {
    alt(n, q_int(n + 1).recip().expect("nonzero")).mul_q_pow(n + 1 - choose2(n + 1))
}

pub fn thm1_printed(g: &Grid) -> Outcome {
    for m in g.span("m") {
        let rhs: QRat = (0..=m)
            .map(|k| {
                let t = &(&qfact(k) / &q_int(k + 1)) * &stirling2_s(k as u32, (m - k) as u32);
                alt(k, t)
            })
            .sum::<QRat>()
            .mul_q_pow(1);
        ensure_eq!(carlitz_beta(m as u32), rhs; m);
    }
    Ok(None)
}

pub fn thm1_corrected(g: &Grid) -> Outcome {
    for m in g.span("m") {
        let rhs: QRat = (0..=m)
            .map(|k| {
                let t = &(&qfact(k) / &q_int(k + 1)) * &stirling2_s(m as u32, k as u32);
                alt(k, t)
            })
            .sum();
        ensure_eq!(carlitz_beta(m as u32), rhs; m);
    }
    Ok(None)
}

/// `Σ_l binom(n,l)_q q^{C(l,2)} (-1)^l q^{l(x-n+1)}`.
fn eq15_sum(n: i64, x: i64) -> QRat {
    (0..=n)
        .map(|l| alt(l, gb(n, l).mul_q_pow(choose2(l) + l * (x - n + 1))))
        .sum()
}

pub fn eq15(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for x in 0..=n + 2 {
            ensure_eq!(&pw(&one_minus_q(), n) * &q_falling(x, n as u32), eq15_sum(n, x); n, x);
        }
    }
    Ok(None)
}

pub fn eq16(g: &Grid) -> Outcome {
    for l in g.span("l") {
        for x in g.span("x") {
            let rhs: QRat = (0..=l)
                .map(|m| (&pw(&q_minus_1(), m) * &pw(&q_int(x), m)).scale(&binom_rat(l, m)))
                .sum();
            ensure_eq!(QRat::q_pow(l * x), rhs; l, x);
        }
    }
    Ok(None)
}

/// Inner coefficient of the l-sum in the EQ17 case: `Σ_{i=m}^{l} binom(l,i)_q q^{C(i,2) - il + i} C(i,m) (-1)^i`.
fn eq17_inner(l: i64, m: i64) -> QRat {
    (m..=l)
        .map(|i| {
            alt(
                i,
                gb(l, i)
                    .scale(&binom_rat(i, m))
                    .mul_q_pow(choose2(i) - i * l + i),
            )
        })
        .sum()
}

pub fn eq17(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for x in 0..=n + 2 {
            let rhs: QRat = (0..=n)
                .map(|m| &(&pw(&q_minus_1(), m) * &eq17_inner(n, m)) * &pw(&q_int(x), m))
                .sum();
            ensure_eq!(eq15_sum(n, x), rhs; n, x);
        }
    }
    Ok(None)
}

fn thm2_with(g: &Grid, corrected: bool) -> Outcome {
    for n in g.span("n") {
        let rhs: QRat = (0..=n)
            .map(|l| {
                let s2 = if corrected {
                    stirling2_c(l as u32, (n - l) as u32)
                } else {
                    stirling2_s(l as u32, (n - l) as u32)
                };
                let inner: QRat = (0..=l)
                    .map(|m| {
                        let pre = if corrected {
                            &pw(&q_minus_1(), m) / &pw(&one_minus_q(), l)
                        } else {
                            pw(&one_minus_q(), m - l)
                        };
                        &(&pre * &eq17_inner(l, m)) * &carlitz_beta(m as u32)
                    })
                    .sum();
                (&s2 * &inner).mul_q_pow(choose2(l))
            })
            .sum();
        ensure_eq!(carlitz_beta(n as u32), rhs; n);
    }
    Ok(None)
}

pub fn thm2_printed(g: &Grid) -> Outcome {
    thm2_with(g, false)
}

pub fn thm2_corrected(g: &Grid) -> Outcome {
    thm2_with(g, true)
}

pub fn eq18_bridge(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for k in g.span("k") {
            ensure_eq!(stirling2_c(n as u32, k as u32), stirling2_s((n + k) as u32, n as u32); n, k);
        }
    }
    Ok(None)
}

pub fn eq18_inverse(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for k in 0..=n {
            let rhs: QRat = (k..=n)
                .map(|j| {
                    (&pw(&q_minus_1(), j - k) * &stirling2_c(k as u32, (j - k) as u32))
                        .scale(&binom_rat(n, j))
                })
                .sum();
            ensure_eq!(gb(n, k), rhs; n, k);
        }
    }
    Ok(None)
}

pub fn eq19(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for t in 0..=n + 2 {
            let lhs = QRat::q_pow(n * t);
            let falling: QRat = (0..=n)
                .map(|k| {
                    (&(&pw(&q_minus_1(), k) * &gb(n, k)) * &q_falling(t, k as u32))
                        .mul_q_pow(choose2(k))
                })
                .sum();
            ensure_eq!(lhs.clone(), falling; n, t);
            let powers: QRat = (0..=n)
                .map(|m| {
                    let c: QRat = (m..=n)
                        .map(|k| {
                            &(&pw(&q_minus_1(), k) * &gb(n, k)) * &stirling1(k as u32, m as u32)
                        })
                        .sum();
                    &c * &pw(&q_int(t), m)
                })
                .sum();
            ensure_eq!(lhs, powers; n, t);
        }
    }
    Ok(None)
}

pub fn eq20(g: &Grid) -> Outcome {
    for n in g.span("n") {
        let rhs: QRat = (0..=n)
            .map(|m| (&pw(&q_minus_1(), m) * &carlitz_beta(m as u32)).scale(&binom_rat(n, m)))
            .sum();
        ensure_eq!(moment_bosonic(n as u32), rhs; n);
    }
    Ok(None)
}

pub fn eq21(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for m in 0..=n {
            let rhs: QRat = (m..=n)
                .map(|k| &(&pw(&q_minus_1(), k - m) * &gb(n, k)) * &stirling1(k as u32, m as u32))
                .sum();
            ensure_eq!(big(&binom(n, m)), rhs; n, m);
        }
    }
    Ok(None)
}

fn s1_expansion(n: i64, x: i64, s1: fn(u32, u32) -> QRat) -> QRat {
    (0..=n)
        .map(|k| &s1(n as u32, k as u32) * &pw(&q_int(x), k))
        .sum()
}

pub fn eq22_vs_product(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for x in 0..=n + 2 {
            let lhs = (&gb(x, n) * &qfact(n)).mul_q_pow(choose2(n));
            ensure_eq!(lhs, s1_expansion(n, x, stirling1); n, x);
        }
    }
    Ok(None)
}

pub fn eq23_printed(g: &Grid) -> Outcome {
    for n in g.span("n") {
        let sum: QRat = (0..=n)
            .map(|k| {
                alt(
                    n - k,
                    &stirling1(n as u32, k as u32) * &carlitz_beta(k as u32),
                )
            })
            .sum();
        let rhs = (&sum / &qfact(n)).mul_q_pow(-1);
        ensure_eq!(q_int(n + 1).recip()?, rhs; n);
    }
    Ok(None)
}

pub fn eq23_corrected(g: &Grid) -> Outcome {
    for n in g.span("n") {
        let lhs: QRat = (0..=n)
            .map(|k| &stirling1(n as u32, k as u32) * &carlitz_beta(k as u32))
            .sum();
        ensure_eq!(lhs, alt(n, &qfact(n) / &q_int(n + 1)); n);
    }
    Ok(None)
}

pub fn eq24_vs_product(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for j in 0..=n {
            ensure_eq!(stirling1_closed(n as u32, j as u32), stirling1(n as u32, j as u32); n, j);
        }
    }
    Ok(None)
}

pub fn thm3(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for x in 0..=n + 2 {
            let lhs = q_falling(x, n as u32).mul_q_pow(choose2(n));
            ensure_eq!(lhs, s1_expansion(n, x, stirling1_closed); n, x);
        }
    }
    Ok(None)
}

pub fn eq26_thm4(g: &Grid) -> Outcome {
    for k in g.span("k") {
        for i in g.span("i") {
            let product: QRat = (1..=k).map(|j| &int(i + j) / &q_int(i + j)).product();
            let binomial = (&gb(i + k, k).recip()? * &qfact(k).recip()?)
                .scale(&(binom_rat(i + k, k) * BigRat::from_integer(factorial(k as u32))));
            ensure_eq!(product, binomial; k, i);
        }
        for n in g.span("n") {
            for x in g.span("x") {
                let (n, k, x) = (n as u32, k as u32, x as u32);
                ensure_eq!(beta_order(n, k, x), beta_order_binomial_form(n, k, x); n, k, x);
            }
        }
    }
    Ok(None)
}

pub fn eq28_eq30(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for k in g.span("k") {
            for x in g.span("x") {
                let (n, k, x) = (n as u32, k as u32, x as u32);
                ensure_eq!(beta_neg_order(n, k, x), beta_neg_order_shifted_form(n, k, x); n, k, x);
            }
        }
    }
    Ok(None)
}

pub fn eq29(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for k in g.span("k") {
            for j in 0..=k {
                let nf = BigRat::from_integer(factorial(n as u32));
                let lhs = binom_rat(k, j) / (binom_rat(j + n, n) * &nf);
                let rhs = binom_rat(k + n, k - j) / (binom_rat(k + n, n) * &nf);
                ensure_eq!(lhs, rhs; n, k, j);
            }
        }
    }
    Ok(None)
}

pub fn eq31(g: &Grid) -> Outcome {
    for k in g.span("k") {
        let value = beta_neg_order(0, k as u32, 0);
        ensure_eq!(value.clone(), qfact_ratio(k as u32); k);
        let integral = IntegrandSpec::MultiExp { k: k as u32, i: 0 }.closed_form(Measure::Bosonic);
        ensure_eq!(value, integral.recip()?; k);
    }
    Ok(None)
}

pub fn s2_k0(g: &Grid) -> Outcome {
    for k in g.span("k") {
        let lhs = &qfact_ratio(k as u32).recip()? * &beta_neg_order(0, k as u32, 0);
        ensure_eq!(lhs.clone(), QRat::one(); k);
        ensure_eq!(lhs, stirling2_c(k as u32, 0); k);
    }
    Ok(None)
}

pub fn beta_example(_: &Grid) -> Outcome {
    let printed = &int(-2) * &(&qp(&[2, 1]) / &(&q_int(2) * &q_int(3)));
    let (n, k) = (1, 2);
    ensure_eq!(beta_order(1, 2, 0), printed; n, k);
    Ok(None)
}

pub fn moment_sum(g: &Grid) -> Outcome {
    for m in g.span("m") {
        for k in g.span("k") {
            let lhs: QRat = (0..=m)
                .map(|i| {
                    (&pw(&q_minus_1(), i) * &beta_order(i as u32, k as u32, 0))
                        .scale(&binom_rat(m, i))
                })
                .sum();
            let integral = IntegrandSpec::MultiExp {
                k: k as u32,
                i: m as u32,
            }
            .closed_form(Measure::Bosonic);
            ensure_eq!(lhs.clone(), integral; m, k);
            let rhs = (&gb(m + k, k).recip()? * &qfact_ratio(k as u32).recip()?)
                .scale(&binom_rat(m + k, k));
            ensure_eq!(lhs, rhs; m, k);
        }
    }
    Ok(None)
}

fn s2_beta_with(g: &Grid, printed: bool) -> Outcome {
    for n in g.span("n") {
        for k in g.span("k") {
            let order = if printed { k } else { n };
            let beta = beta_neg_order(k as u32, order as u32, 0);
            let pre = BigRat::from_integer(binom(k + n, n) * factorial(n as u32));
            let lhs = (&beta / &qfact(n)).scale(&pre);
            ensure_eq!(stirling2_c(n as u32, k as u32), lhs; n, k);
        }
    }
    Ok(None)
}

pub fn s2_beta_rel(g: &Grid) -> Outcome {
    s2_beta_with(g, false)
}

pub fn s2_beta_printed(g: &Grid) -> Outcome {
    s2_beta_with(g, true)
}

/// `(1-q)^{-k} Σ_i (±1) C(k,i) / ∫ q^{Σ(n-l+i)x_l} = [n]_q! s2(n,k) / (C(k+n,n) n!)`.
fn s2_beta_integral_with(g: &Grid, printed: bool) -> Outcome {
    for n in g.span("n") {
        for k in g.span("k") {
            let sum: QRat = (0..=k)
                .map(|i| {
                    let integral = IntegrandSpec::MultiExp {
                        k: n as u32,
                        i: i as u32,
                    }
                    .closed_form(Measure::Bosonic);
                    let t = integral.recip().expect("nonzero").scale(&binom_rat(k, i));
                    alt(if printed { k } else { i }, t)
                })
                .sum();
            let lhs = &sum / &pw(&one_minus_q(), k);
            let den = BigRat::from_integer(binom(k + n, n) * factorial(n as u32));
            let rhs = (&qfact(n) * &stirling2_c(n as u32, k as u32)).scale(&den.recip());
            ensure_eq!(lhs, rhs; n, k);
        }
    }
    Ok(None)
}

pub fn s2_beta_integral_printed(g: &Grid) -> Outcome {
    s2_beta_integral_with(g, true)
}

pub fn s2_beta_integral_corrected(g: &Grid) -> Outcome {
    s2_beta_integral_with(g, false)
}

fn final_s1_with(g: &Grid, factors: fn(i64) -> i64) -> Outcome {
    for n in g.span("n") {
        for x in 0..=n + 2 {
            let lhs = gb(x, n).mul_q_pow(choose2(n));
            let prod: QRat = (0..factors(n)).map(|k| &q_int(x) - &q_int(k)).product();
            let rhs = &prod / &qfact(n);
            ensure_eq!(lhs.clone(), rhs; n, x);
            ensure_eq!(lhs, &s1_expansion(n, x, stirling1) / &qfact(n); n, x);
        }
    }
    Ok(None)
}

pub fn final_s1_product(g: &Grid) -> Outcome {
    final_s1_with(g, |n| n)
}

pub fn final_s1_printed(g: &Grid) -> Outcome {
    final_s1_with(g, |n| n + 1)
}

pub fn sample_pairs() -> Vec<(BigRat, BigRat)> {
    let r = |n: i64, d: i64| BigRat::new(n.into(), d.into());
    vec![
        (r(1, 1), r(1, 1)),
        (r(2, 1), r(-3, 1)),
        (r(-1, 2), r(5, 1)),
        (r(3, 4), r(2, 3)),
        (r(7, 1), r(-1, 1)),
    ]
}

fn eq33_finite_with(g: &Grid, printed: bool) -> Outcome {
    for n in g.span("n") {
        for (a, b) in sample_pairs() {
            let lhs = QRat::from_poly(q_binom_product(n as u32, &a, &b));
            let rhs: QRat = (0..=n)
                .map(|k| {
                    let c = num_traits::pow(b.clone(), k as usize);
                    let t = gb(n, k).mul_q_pow(choose2(k)).scale(&c);
                    if printed {
                        t.mul_q_pow(n - k)
                    } else {
                        t.scale(&num_traits::pow(a.clone(), (n - k) as usize))
                    }
                })
                .sum();
            if lhs != rhs {
                return Ok(Some(
                    Counterexample::new(&[("n", n)], &lhs, &rhs)
                        .with("a", a.to_string())
                        .with("b", b.to_string()),
                ));
            }
        }
    }
    Ok(None)
}

pub fn eq33_corrected_finite(g: &Grid) -> Outcome {
    eq33_finite_with(g, false)
}

pub fn eq33_printed_finite(g: &Grid) -> Outcome {
    eq33_finite_with(g, true)
}

pub fn eq33_series(g: &Grid) -> Outcome {
    let order = g.hi("D") as usize;
    for n in g.span("n") {
        for j in g.span("j") {
            for sign in [Sign::Plus, Sign::Minus] {
                let b = if sign == Sign::Plus { 1 } else { -1 };
                // Π_{i=1}^n (1 - b q^{j+i-1})
                let prod: QRat = (0..n)
                    .map(|i| {
                        &QRat::one() - &QRat::q_pow(j + i).scale(&BigRat::from_integer(b.into()))
                    })
                    .product();
                let oracle = prod.recip()?.to_series(order)?;
                let series = q_binom_series(n as u32, sign, j, order)?;
                if oracle != series {
                    return Ok(Some(
                        Counterexample::new(
                            &[("n", n), ("j", j)],
                            fmt_series(&series),
                            fmt_series(&oracle),
                        )
                        .with("sign", b),
                    ));
                }
            }
        }
    }
    Ok(None)
}

fn fmt_series(s: &crate::arith::QSeries) -> String {
    let body: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", body.join(", "))
}

pub fn eq34_eq35(g: &Grid) -> Outcome {
    for k in g.span("k") {
        for n in g.span("n") {
            for x in g.span("x") {
                let (k, n, x) = (k as u32, n as u32, x as u32);
                ensure_eq!(euler_neg_order(k, n, x), euler_neg_order_expanded(k, n, x); k, n, x);
            }
        }
    }
    Ok(None)
}

pub fn prop6(g: &Grid) -> Outcome {
    let order = g.hi("D") as usize;
    for k in g.span("k") {
        for n in g.span("n") {
            for x in g.span("x") {
                let cmp = prop6_check(k as u32, n as u32, x as u32, order)?;
                if !cmp.equal {
                    return Ok(Some(Counterexample::new(
                        &[("k", k), ("n", n), ("x", x)],
                        fmt_series(&cmp.closed_form),
                        fmt_series(&cmp.series_form),
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// Classical limits of the Stirling families, used by the limit tables.
pub fn stirling_limits(g: &Grid) -> Outcome {
    for n in g.span("n") {
        for k in 0..=n {
            let (nu, ku) = (n as u32, k as u32);
            ensure_eq!(stirling2_s(nu, ku).limit_q1()?, BigRat::from_integer(stirling2(nu, ku)); n, k);
            ensure_eq!(stirling1(nu, ku).limit_q1()?, BigRat::from_integer(stirling1_signed(nu, ku)); n, k);
        }
    }
    Ok(None)
}
