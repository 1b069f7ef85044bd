use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use super::integrand::{IntegrandSpec, Measure, MonomialShape};
use super::num::{rational_valuation, PadicNum};
use super::residue::{BigMod, ResidueRing, SmallMod};
use super::{IntegrationConfig, PadicQ};
use crate::arith::{BigRat, QRat};
use crate::error::{Error, Result};

/// Summation strategy for [`volkenborn_multi`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiMethod {
    /// The k-fold Riemann sum over all `p^{kN}` points.
    Direct,
    /// Expand into exponentials and multiply univariate Riemann sums.
    Factorized,
}

/// Univariate Riemann sum at level `n`:
/// `(1/[p^n]_q) Σ_j q^j f(j)` or `(1/[p^n]_{-q}) Σ_j (-q)^j f(j)`.
pub fn volkenborn(
    f: &IntegrandSpec,
    q: &PadicQ,
    n: u32,
    measure: Measure,
    cfg: &IntegrationConfig,
) -> Result<PadicNum> {
    if f.arity() != 1 {
        return Err(Error::ArityError {
            expected: 1,
            got: f.arity(),
        });
    }
    check_budget(q.p(), n, 1, cfg.univariate_budget)?;
    riemann(f, q, n, measure, cfg)
}

/// k-fold Riemann sum at level `n`, directly or through the factorization
/// into univariate sums.
pub fn volkenborn_multi(
    f: &IntegrandSpec,
    q: &PadicQ,
    n: u32,
    measure: Measure,
    method: MultiMethod,
    cfg: &IntegrationConfig,
) -> Result<PadicNum> {
    match method {
        MultiMethod::Direct => {
            check_budget(q.p(), n, f.arity() as u32, cfg.multivariate_budget)?;
            riemann(f, q, n, measure, cfg)
        }
        MultiMethod::Factorized => factorized(f, q, n, measure, cfg),
    }
}

/// Riemann sum of any catalog integrand, univariate or not.
pub fn integrate(
    f: &IntegrandSpec,
    q: &PadicQ,
    n: u32,
    measure: Measure,
    cfg: &IntegrationConfig,
) -> Result<PadicNum> {
    if f.arity() == 1 {
        volkenborn(f, q, n, measure, cfg)
    } else {
        volkenborn_multi(f, q, n, measure, MultiMethod::Direct, cfg)
    }
}

fn check_budget(p: u64, n: u32, k: u32, budget: u128) -> Result<()> {
    let terms = (p as u128)
        .checked_pow(n.saturating_mul(k))
        .unwrap_or(u128::MAX);
    if terms > budget {
        return Err(Error::TermBudgetExceeded { terms, budget });
    }
    Ok(())
}

fn riemann(
    f: &IntegrandSpec,
    q: &PadicQ,
    n: u32,
    measure: Measure,
    cfg: &IntegrationConfig,
) -> Result<PadicNum> {
    let p = q.p();
    let k = f.arity() as u32;
    let lost = match measure {
        Measure::Bosonic => k * n,
        Measure::Fermionic => 0,
    };
    let w = lost + cfg.digits();
    let modulus = BigUint::from(p).pow(w);
    let len = p.pow(n) as usize;
    let sum = match modulus.to_u64_digits().as_slice() {
        [m] if *m < (1 << 63) => {
            let ring = SmallMod::new(*m);
            ring.to_big(&raw_sum(&ring, f, q, len, measure, &modulus))
        }
        _ => {
            let ring = BigMod::new(modulus.clone());
            raw_sum(&ring, f, q, len, measure, &modulus)
        }
    };
    let s = PadicNum::from_residue(&sum, p, w);
    let d = normalizer(q, n, measure, w)?;
    let mut dk = PadicNum::from_int(1, p, w)?;
    for _ in 0..k {
        dk = dk.mul(&d)?;
    }
    s.div(&dk)
}

/// `[p^n]_q` or `[p^n]_{-q}` with `digits` digits of relative precision.
fn normalizer(q: &PadicQ, n: u32, measure: Measure, digits: u32) -> Result<PadicNum> {
    let p = q.p();
    let pn = BigUint::from(p).pow(n);
    match (measure, q.w()) {
        (Measure::Bosonic, None) => {
            PadicNum::from_rational(&BigRat::from_integer(pn.into()), p, digits)
        }
        (Measure::Bosonic, Some(w)) => {
            // (q^{p^n} - 1) / (q - 1), numerator of valuation n + w
            let extra = digits + n + w as u32;
            let m = BigUint::from(p).pow(extra);
            let t = q.residue_mod(&m).modpow(&pn, &m);
            let num = PadicNum::from_residue(&((t + &m - BigUint::one()) % &m), p, extra);
            let den = PadicNum::from_rational(&(q.q() - BigRat::one()), p, digits)?;
            num.div(&den)
        }
        (Measure::Fermionic, _) => {
            // (1 + q^{p^n}) / (1 + q), a unit
            let m = BigUint::from(p).pow(digits);
            let t = q.residue_mod(&m).modpow(&pn, &m);
            let num = PadicNum::from_residue(&(t + BigUint::one()), p, digits);
            let den = PadicNum::from_rational(&(q.q() + BigRat::one()), p, digits)?;
            num.div(&den)
        }
    }
}

fn raw_sum<R: ResidueRing>(
    ring: &R,
    f: &IntegrandSpec,
    q: &PadicQ,
    len: usize,
    measure: Measure,
    modulus: &BigUint,
) -> R::Elem {
    let qe = ring.reduce(&q.residue_mod(modulus));
    let weight = match measure {
        Measure::Bosonic => qe.clone(),
        Measure::Fermionic => ring.neg(&qe),
    };
    match (f, f.shape()) {
        (_, Some(shape)) => shape_sum(ring, &shape, &qe, &weight, len),
        (IntegrandSpec::GaussBinom(n), None) => gauss_binom_sum(ring, *n, &qe, &weight, len),
        _ => unreachable!("every non-binomial integrand has a shape"),
    }
}

/// `Σ_j weight^j binom(j, n)_q`, updating the Pascal row in `j`.
fn gauss_binom_sum<R: ResidueRing>(
    ring: &R,
    n: u32,
    q: &R::Elem,
    weight: &R::Elem,
    len: usize,
) -> R::Elem {
    let n = n as usize;
    let qpow = ring.powers(q, n + 1);
    let mut row = vec![ring.zero(); n + 1];
    row[0] = ring.one();
    let mut wj = ring.one();
    let mut acc = ring.zero();
    for _ in 0..len {
        acc = ring.add(&acc, &ring.mul(&wj, &row[n]));
        for i in (1..=n).rev() {
            let t = ring.mul(&qpow[i], &row[i]);
            row[i] = ring.add(&row[i - 1], &t);
        }
        wj = ring.mul(&wj, weight);
    }
    acc
}

/// `Σ_{x ∈ [0, len)^d} Π_l (weight · q^{e_l})^{x_l} · [Σx + shift]_q^power`.
fn shape_sum<R: ResidueRing>(
    ring: &R,
    shape: &MonomialShape,
    q: &R::Elem,
    weight: &R::Elem,
    len: usize,
) -> R::Elem {
    let d = shape.exps.len();
    let tables: Vec<Vec<R::Elem>> = shape
        .exps
        .iter()
        .map(|&e| {
            let base = ring.mul(weight, &ring.pow(q, e as u64));
            ring.powers(&base, len)
        })
        .collect();
    let top = shape.shift as usize + d * (len - 1);
    let qint_pow: Option<Vec<R::Elem>> = (shape.power > 0).then(|| {
        let mut out = Vec::with_capacity(top + 1 - shape.shift as usize);
        let (mut qj, mut int) = (ring.one(), ring.zero());
        for j in 0..=top {
            if j >= shape.shift as usize {
                out.push(ring.pow(&int, shape.power as u64));
            }
            int = ring.add(&int, &qj);
            qj = ring.mul(&qj, q);
        }
        out
    });
    let leaf = |s: usize, acc: &R::Elem| match &qint_pow {
        Some(t) => ring.mul(acc, &t[s]),
        None => acc.clone(),
    };
    if d == 1 {
        return (0..len).fold(ring.zero(), |sum, x| {
            ring.add(&sum, &leaf(x, &tables[0][x]))
        });
    }
    (0..len)
        .into_par_iter()
        .map(|x0| {
            let mut sum = ring.zero();
            nested(ring, &tables, 1, x0, &tables[0][x0], &leaf, &mut sum);
            sum
        })
        .reduce(|| ring.zero(), |a, b| ring.add(&a, &b))
}

fn nested<R, F>(
    ring: &R,
    tables: &[Vec<R::Elem>],
    level: usize,
    s: usize,
    acc: &R::Elem,
    leaf: &F,
    sum: &mut R::Elem,
) where
    R: ResidueRing,
    F: Fn(usize, &R::Elem) -> R::Elem,
{
    if level == tables.len() {
        *sum = ring.add(sum, &leaf(s, acc));
        return;
    }
    for (x, t) in tables[level].iter().enumerate() {
        nested(ring, tables, level + 1, s + x, &ring.mul(acc, t), leaf, sum);
    }
}

fn factorized(
    f: &IntegrandSpec,
    q: &PadicQ,
    n: u32,
    measure: Measure,
    cfg: &IntegrationConfig,
) -> Result<PadicNum> {
    if q.is_one() {
        return Err(Error::InvalidPadic("the factorization needs q != 1".into()));
    }
    let expansion = f.exp_poly();
    let mut cache: BTreeMap<u32, PadicNum> = BTreeMap::new();
    let mut total = PadicNum::zero(q.p());
    for term in &expansion.terms {
        let mut prod = q.eval_qrat(&term.coeff, cfg.digits())?;
        for &e in &term.exps {
            if let Entry::Vacant(slot) = cache.entry(e) {
                slot.insert(volkenborn(&IntegrandSpec::QExp(e), q, n, measure, cfg)?);
            }
            prod = prod.mul(&cache[&e])?;
        }
        total = total.add(&prod)?;
    }
    if !total.is_zero() && total.precision() == 0 {
        return Err(Error::PrecisionExhausted(format!(
            "factorized {f} at level {n}"
        )));
    }
    Ok(total)
}

/// Lower bound on `v_p(level-n Riemann sum - integral)`, from the exact
/// error of each exponential term. `None` when no bound is available
/// (`q = 1`); `Some(i64::MAX)` when the Riemann sum is exact.
pub fn riemann_error_bound(f: &IntegrandSpec, q: &PadicQ, n: u32, measure: Measure) -> Option<i64> {
    let w = q.w()?;
    let p = q.p();
    let vp = |x: u32| rational_valuation(&BigRat::from_integer(x.into()), p).unwrap_or(0);
    let var_bound = |e: u32| -> Option<i64> {
        match measure {
            Measure::Bosonic if e == 0 => None,
            Measure::Bosonic => Some(n as i64 + w - vp(e + 1)),
            Measure::Fermionic if e == 0 => None,
            Measure::Fermionic => Some(n as i64 + w + vp(e)),
        }
    };
    let mut best = i64::MAX;
    for term in f.exp_poly().terms {
        let Ok(c) = term.coeff.eval(q.q()) else {
            return None;
        };
        let Some(vc) = rational_valuation(&c, p) else {
            continue;
        };
        let bounds: Vec<Option<i64>> = term.exps.iter().map(|&e| var_bound(e)).collect();
        let neg: i64 = bounds.iter().flatten().map(|&b| b.min(0)).sum();
        let term_bound = bounds
            .iter()
            .flatten()
            .map(|&b| vc + b + neg - b.min(0))
            .min();
        if let Some(tb) = term_bound {
            best = best.min(tb);
        }
    }
    Some(best)
}

/// One row of [`convergence_probe`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeRow {
    pub level: u32,
    pub value: PadicNum,
    /// `v_p(sum - reference)`; `None` when they agree to `abs_precision`.
    pub valuation: Option<i64>,
    pub abs_precision: i64,
}

impl ProbeRow {
    /// The valuation, reading exact agreement as the precision reached.
    pub fn valuation_or_precision(&self) -> i64 {
        self.valuation.unwrap_or(self.abs_precision)
    }
}

/// Valuation of `(Riemann sum - reference)` at each level.
pub fn convergence_probe(
    f: &IntegrandSpec,
    q: &PadicQ,
    levels: RangeInclusive<u32>,
    measure: Measure,
    reference: &QRat,
    cfg: &IntegrationConfig,
) -> Result<Vec<ProbeRow>> {
    let r = q.eval_qrat(reference, cfg.digits() + 8)?;
    levels
        .map(|level| {
            let value = integrate(f, q, level, measure, cfg)?;
            let diff = value.sub(&r)?;
            let abs = value
                .absolute_precision()
                .unwrap_or(cfg.digits() as i64)
                .min(r.absolute_precision().unwrap_or(i64::MAX));
            Ok(ProbeRow {
                level,
                valuation: diff.valuation(),
                abs_precision: abs,
                value,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::carlitz_beta;

    fn cfg() -> IntegrationConfig {
        IntegrationConfig::default()
    }

    #[test]
    fn normalization_is_exact() {
        let q = PadicQ::from_offset(5, 1).unwrap();
        for n in 1..=5 {
            for measure in [Measure::Bosonic, Measure::Fermionic] {
                let v = volkenborn(&IntegrandSpec::QExp(0), &q, n, measure, &cfg()).unwrap();
                assert_eq!(v, PadicNum::from_int(1, 5, cfg().digits()).unwrap());
            }
        }
    }

    #[test]
    fn powq_converges_to_carlitz() {
        let q = PadicQ::from_offset(5, 1).unwrap();
        let rows = convergence_probe(
            &IntegrandSpec::PowQ(1),
            &q,
            2..=6,
            Measure::Bosonic,
            &carlitz_beta(1),
            &cfg(),
        )
        .unwrap();
        let vals: Vec<i64> = rows.iter().map(|r| r.valuation_or_precision()).collect();
        assert!(vals.windows(2).all(|w| w[0] < w[1]), "{vals:?}");
    }

    #[test]
    fn budgets_enforced() {
        let q = PadicQ::from_offset(5, 1).unwrap();
        let err = volkenborn(&IntegrandSpec::QExp(1), &q, 8, Measure::Bosonic, &cfg());
        assert!(matches!(err, Err(Error::TermBudgetExceeded { .. })));
        let q3 = PadicQ::from_offset(3, 1).unwrap();
        let spec = IntegrandSpec::MultiExp { k: 3, i: 0 };
        let err = volkenborn_multi(&spec, &q3, 4, Measure::Bosonic, MultiMethod::Direct, &cfg());
        assert!(matches!(err, Err(Error::TermBudgetExceeded { .. })));
        assert!(volkenborn(&spec, &q3, 1, Measure::Bosonic, &cfg()).is_err());
    }

    #[test]
    fn single_variable_reduction() {
        let q = PadicQ::from_offset(3, 1).unwrap();
        for m in 0..4 {
            let uni = volkenborn(&IntegrandSpec::QExp(m), &q, 3, Measure::Bosonic, &cfg()).unwrap();
            let spec = IntegrandSpec::MultiExp { k: 1, i: m };
            let multi =
                volkenborn_multi(&spec, &q, 3, Measure::Bosonic, MultiMethod::Direct, &cfg())
                    .unwrap();
            assert_eq!(uni, multi);
        }
    }

    #[test]
    fn small_and_big_moduli_agree() {
        // p = 101 forces the BigUint ring at level 2
        let q = PadicQ::from_offset(101, 1).unwrap();
        let a = volkenborn(&IntegrandSpec::PowQ(2), &q, 2, Measure::Bosonic, &cfg()).unwrap();
        let small = IntegrationConfig {
            precision: 3,
            guard: 1,
            ..cfg()
        };
        let b = volkenborn(&IntegrandSpec::PowQ(2), &q, 2, Measure::Bosonic, &small).unwrap();
        assert!(a.sub(&b).unwrap().is_zero());
    }

    #[test]
    fn q_equal_one_gives_volkenborn_integral() {
        // ∫ x dx = -1/2 for q = 1, and the level-n sum is (p^n - 1)/2
        let q = PadicQ::new(3, BigRat::one()).unwrap();
        let v = volkenborn(&IntegrandSpec::PowQ(1), &q, 4, Measure::Bosonic, &cfg()).unwrap();
        let expect = PadicNum::from_int(40, 3, 16).unwrap();
        assert!(v.sub(&expect).unwrap().is_zero());
        assert_eq!(
            riemann_error_bound(&IntegrandSpec::PowQ(1), &q, 4, Measure::Bosonic),
            None
        );
    }

    #[test]
    fn rejects_bad_q() {
        assert!(PadicQ::new(5, BigRat::from_integer(2.into())).is_err());
        assert!(PadicQ::from_offset(4, 1).is_err());
        assert!(PadicQ::new(5, BigRat::new(7.into(), 6.into())).is_err());
        assert!(PadicQ::new(5, BigRat::new(11.into(), 6.into())).is_ok());
    }
}
