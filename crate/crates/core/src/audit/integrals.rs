//! Checks that compare level-N Riemann sums against exact closed forms.
//!
//! A numeric value passes at level `N` when its distance to the exact value
//! has valuation at least the proven truncation bound (capped by the
//! precision carried), and the valuations never decrease as `N` grows.

use super::exact::{eq13_corrected_value, eq13_printed_value, gauss_binom_integral};
use super::{Counterexample, Grid, Outcome};
use crate::arith::{QPoly, QRat};
use crate::bernoulli::{beta_neg_order, beta_order, carlitz_beta, euler_order};
use crate::error::Result;
use crate::padic::{
    integrate, riemann_error_bound, volkenborn, volkenborn_multi, IntegrandSpec, IntegrationConfig,
    Measure, MultiMethod, PadicNum, PadicQ,
};
use crate::qcore::binom_rat;

/// Odd primes in a range.
fn primes(g: &Grid) -> Vec<u64> {
    g.span("p")
        .filter(|&p| p >= 3 && crate::padic::validate_prime(p as u64).is_ok())
        .map(|p| p as u64)
        .collect()
}

/// A level-N approximation together with its truncation bound.
struct Approx {
    value: PadicNum,
    bound: Option<i64>,
}

/// Compare approximations at successive levels with an exact reference.
/// Returns the first failing level with both sides rendered.
fn valuation_criterion(
    q: &PadicQ,
    levels: impl Iterator<Item = u32>,
    reference: &QRat,
    cfg: &IntegrationConfig,
    approx: impl Fn(u32) -> Result<Approx>,
    min_final: Option<i64>,
) -> Result<Option<(u32, String, String)>> {
    let r = q.eval_qrat(reference, cfg.digits() + 8)?;
    let mut prev: Option<i64> = None;
    let mut last = None;
    for level in levels {
        let a = approx(level)?;
        let diff = a.value.sub(&r)?;
        let abs = a
            .value
            .absolute_precision()
            .unwrap_or(cfg.digits() as i64)
            .min(r.absolute_precision().unwrap_or(i64::MAX));
        let v = diff.valuation().unwrap_or(abs).min(abs);
        let need = a.bound.unwrap_or(i64::MIN).min(abs);
        let decreased = prev.is_some_and(|p| v < p);
        if v < need || decreased {
            return Ok(Some((
                level,
                format!("{} (valuation of difference {v})", a.value),
                format!("{reference} = {r}"),
            )));
        }
        prev = Some(v);
        last = Some((level, v, a.value));
    }
    if let (Some(min), Some((level, v, value))) = (min_final, last) {
        if v < min {
            return Ok(Some((
                level,
                format!("{value} (valuation of difference {v} < {min})"),
                format!("{reference} = {r}"),
            )));
        }
    }
    Ok(None)
}

fn cx(params: &[(&str, i64)], level: u32, lhs: String, rhs: String) -> Counterexample {
    Counterexample::new(params, lhs, rhs).with("N", level as i64)
}

fn single<'a>(
    f: IntegrandSpec,
    q: &'a PadicQ,
    measure: Measure,
    cfg: &'a IntegrationConfig,
) -> impl Fn(u32) -> Result<Approx> + 'a {
    move |level| {
        Ok(Approx {
            value: integrate(&f, q, level, measure, cfg)?,
            bound: riemann_error_bound(&f, q, level, measure),
        })
    }
}

fn levels(g: &Grid) -> impl Iterator<Item = u32> {
    g.span("N").map(|n| n as u32)
}

pub fn eq04_normalization(g: &Grid) -> Outcome {
    normalization(g, Measure::Bosonic)
}

pub fn fermionic_normalization(g: &Grid) -> Outcome {
    normalization(g, Measure::Fermionic)
}

fn normalization(g: &Grid, measure: Measure) -> Outcome {
    let cfg = IntegrationConfig::default();
    for p in primes(g) {
        let q = PadicQ::from_offset(p, 1)?;
        for level in levels(g) {
            let v = volkenborn(&IntegrandSpec::QExp(0), &q, level, measure, &cfg)?;
            let one = PadicNum::from_int(1, p, cfg.digits())?;
            if v != one {
                return Ok(Some(cx(
                    &[("p", p as i64)],
                    level,
                    v.to_string(),
                    one.to_string(),
                )));
            }
        }
    }
    Ok(None)
}

pub fn eq05(g: &Grid) -> Outcome {
    let cfg = IntegrationConfig::default();
    for p in primes(g) {
        let q = PadicQ::from_offset(p, 1)?;
        for m in g.span("m") {
            let f = IntegrandSpec::PowQ(m as u32);
            let bad = valuation_criterion(
                &q,
                levels(g),
                &carlitz_beta(m as u32),
                &cfg,
                single(f, &q, Measure::Bosonic, &cfg),
                Some(3),
            )?;
            if let Some((level, l, r)) = bad {
                return Ok(Some(cx(&[("p", p as i64), ("m", m)], level, l, r)));
            }
        }
    }
    Ok(None)
}

pub fn moments_numeric(g: &Grid) -> Outcome {
    let cfg = IntegrationConfig::default();
    for p in primes(g) {
        let q = PadicQ::from_offset(p, 1)?;
        for measure in [Measure::Bosonic, Measure::Fermionic] {
            for m in g.span("m") {
                let f = IntegrandSpec::QExp(m as u32);
                let bad = valuation_criterion(
                    &q,
                    levels(g),
                    &measure.moment(m as u32),
                    &cfg,
                    single(f, &q, measure, &cfg),
                    None,
                )?;
                if let Some((level, l, r)) = bad {
                    return Ok(Some(
                        cx(&[("p", p as i64), ("m", m)], level, l, r)
                            .with("measure", measure.to_string()),
                    ));
                }
            }
        }
    }
    Ok(None)
}

/// Exact ∫ binom(x,n)_q dμ_q against a reference, then the Riemann sums
/// against the same reference.
fn eq13_with(g: &Grid, reference: fn(i64) -> QRat) -> Outcome {
    for n in g.span("n") {
        let exact = gauss_binom_integral(n);
        let r = reference(n);
        if exact != r {
            return Ok(Some(Counterexample::new(&[("n", n)], &exact, &r)));
        }
    }
    let cfg = IntegrationConfig::default();
    for p in primes(g) {
        let q = PadicQ::from_offset(p, 1)?;
        for n in 0..=g.hi("n").min(4) {
            let f = IntegrandSpec::GaussBinom(n as u32);
            let bad = valuation_criterion(
                &q,
                levels(g),
                &reference(n),
                &cfg,
                single(f, &q, Measure::Bosonic, &cfg),
                None,
            )?;
            if let Some((level, l, r)) = bad {
                return Ok(Some(cx(&[("p", p as i64), ("n", n)], level, l, r)));
            }
        }
    }
    Ok(None)
}

pub fn eq13_corrected(g: &Grid) -> Outcome {
    eq13_with(g, eq13_corrected_value)
}

pub fn eq13_printed(g: &Grid) -> Outcome {
    eq13_with(g, eq13_printed_value)
}

/// `Σ_i c_i · R_i` (or `Σ_i c_i / R_i`) over MultiExp Riemann sums, with the
/// bound propagated through the combination.
fn multiexp_combination(
    q: &PadicQ,
    level: u32,
    k: u32,
    coeffs: &[(u32, QRat)],
    reciprocal: bool,
    cfg: &IntegrationConfig,
) -> Result<Approx> {
    let p = q.p();
    let mut value = PadicNum::zero(p);
    let mut bound = Some(i64::MAX);
    for (i, c) in coeffs {
        let f = IntegrandSpec::MultiExp { k, i: *i };
        let r = integrate(&f, q, level, Measure::Bosonic, cfg)?;
        let cp = q.eval_qrat(c, cfg.digits())?;
        let term = if reciprocal { cp.div(&r)? } else { cp.mul(&r)? };
        value = value.add(&term)?;
        let exact = q.eval_qrat(&f.closed_form(Measure::Bosonic), cfg.digits())?;
        let va = exact.valuation().unwrap_or(0);
        let vc = cp.valuation().unwrap_or(i64::MAX / 4);
        bound = match (bound, riemann_error_bound(&f, q, level, Measure::Bosonic)) {
            (Some(b), Some(t)) if t == i64::MAX => Some(b),
            (Some(b), Some(t)) => Some(b.min(vc + t - if reciprocal { 2 * va } else { 0 })),
            _ => None,
        };
    }
    Ok(Approx { value, bound })
}

/// `(1-q)^{-n} (-1)^i C(n,i) q^{ix}` for `i = 0..=n`.
fn eq25_coeffs(n: u32, x: u32) -> Vec<(u32, QRat)> {
    let scale = QRat::from_poly(QPoly::from_i64s(&[1, -1]))
        .pow(-(n as i32))
        .expect("nonzero");
    (0..=n)
        .map(|i| {
            let mut c = scale
                .scale(&binom_rat(n as i64, i as i64))
                .mul_q_pow((i * x) as i64);
            if i % 2 == 1 {
                c = -c;
            }
            (i, c)
        })
        .collect()
}

fn higher_order_with(g: &Grid, reciprocal: bool) -> Outcome {
    let cfg = IntegrationConfig::default();
    for p in primes(g) {
        let q = PadicQ::from_offset(p, 1)?;
        for n in g.span("n") {
            for k in g.span("k") {
                for x in g.span("x") {
                    let (nu, ku, xu) = (n as u32, k as u32, x as u32);
                    let coeffs = eq25_coeffs(nu, xu);
                    let reference = if reciprocal {
                        beta_neg_order(nu, ku, xu)
                    } else {
                        beta_order(nu, ku, xu)
                    };
                    let bad = valuation_criterion(
                        &q,
                        levels(g),
                        &reference,
                        &cfg,
                        |level| multiexp_combination(&q, level, ku, &coeffs, reciprocal, &cfg),
                        None,
                    )?;
                    if let Some((level, l, r)) = bad {
                        return Ok(Some(cx(
                            &[("p", p as i64), ("n", n), ("k", k), ("x", x)],
                            level,
                            l,
                            r,
                        )));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn eq25_integral(g: &Grid) -> Outcome {
    higher_order_with(g, false)
}

pub fn eq27_integral(g: &Grid) -> Outcome {
    higher_order_with(g, true)
}

/// Direct k-fold sums equal the factorized products to the precision carried.
pub fn fubini(g: &Grid) -> Outcome {
    let cfg = IntegrationConfig::default();
    for p in primes(g) {
        let q = PadicQ::from_offset(p, 1)?;
        for k in g.span("k") {
            for i in g.span("i") {
                let f = IntegrandSpec::MultiExp {
                    k: k as u32,
                    i: i as u32,
                };
                for level in levels(g) {
                    if let Some(c) = direct_vs_factorized(&f, &q, level, Measure::Bosonic, &cfg)? {
                        return Ok(Some(c.with("k", k).with("i", i).with("p", p as i64)));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn direct_vs_factorized(
    f: &IntegrandSpec,
    q: &PadicQ,
    level: u32,
    measure: Measure,
    cfg: &IntegrationConfig,
) -> Result<Option<Counterexample>> {
    let direct = volkenborn_multi(f, q, level, measure, MultiMethod::Direct, cfg)?;
    let fact = volkenborn_multi(f, q, level, measure, MultiMethod::Factorized, cfg)?;
    if !direct.agrees_with(&fact)? {
        return Ok(Some(
            Counterexample::new(&[], direct.to_string(), fact.to_string()).with("N", level as i64),
        ));
    }
    Ok(None)
}

pub fn euler_closed_vs_integral(g: &Grid) -> Outcome {
    let cfg = IntegrationConfig::default();
    for p in primes(g) {
        let q = PadicQ::from_offset(p, 1)?;
        for n in g.span("n") {
            for k in g.span("k") {
                for x in g.span("x") {
                    let f = IntegrandSpec::MultiEulerPow {
                        n: n as u32,
                        k: k as u32,
                        x: x as u32,
                    };
                    let params = [("p", p as i64), ("n", n), ("k", k), ("x", x)];
                    for level in levels(g) {
                        if let Some(c) =
                            direct_vs_factorized(&f, &q, level, Measure::Fermionic, &cfg)?
                        {
                            let mut c = c;
                            for (name, v) in params {
                                c = c.with(name, v);
                            }
                            return Ok(Some(c));
                        }
                    }
                    let reference = euler_order(k as u32, n as u32, x as u32);
                    let bad = valuation_criterion(
                        &q,
                        levels(g),
                        &reference,
                        &cfg,
                        single(f, &q, Measure::Fermionic, &cfg),
                        None,
                    )?;
                    if let Some((level, l, r)) = bad {
                        return Ok(Some(cx(&params, level, l, r)));
                    }
                }
            }
        }
    }
    Ok(None)
}
