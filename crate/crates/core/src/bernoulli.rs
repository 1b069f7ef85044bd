//! Carlitz q-Bernoulli numbers, higher-order q-Bernoulli numbers of positive
//! and negative order, and higher-order q-Euler numbers.
//!
//! Everything here is computed from closed forms as exact [`QRat`] values.
//! The multivariate p-adic integrals these closed forms evaluate live in
//! [`crate::padic`] and serve as numeric oracles.

use std::sync::Mutex;

use crate::arith::{BigRat, QPoly, QRat, QSeries};
use crate::error::Result;
use crate::qcore::{
    binom, binom_rat, choose2, factorial, gauss_binom_rat, q_binom_series, q_factorial, q_int, Sign,
};

/// Family of a [`BernoulliValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BernoulliFamily {
    Carlitz,
    Order,
    NegOrder,
}

/// A q-Bernoulli value `β^{(order)}_{index,q}(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliValue {
    pub family: BernoulliFamily,
    pub order: u32,
    pub index: u32,
    pub x: u32,
    pub value: QRat,
}

impl BernoulliValue {
    pub fn carlitz(m: u32) -> Self {
        BernoulliValue {
            family: BernoulliFamily::Carlitz,
            order: 1,
            index: m,
            x: 0,
            value: carlitz_beta(m),
        }
    }

    pub fn order(index: u32, order: u32, x: u32) -> Self {
        BernoulliValue {
            family: BernoulliFamily::Order,
            order,
            index,
            x,
            value: beta_order(index, order, x),
        }
    }

    pub fn neg_order(index: u32, order: u32, x: u32) -> Self {
        BernoulliValue {
            family: BernoulliFamily::NegOrder,
            order,
            index,
            x,
            value: beta_neg_order(index, order, x),
        }
    }
}

/// A q-Euler value `E^{(order)}_{index}(x, q)`; negative orders use the
/// polynomial analogue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerValue {
    pub order: i32,
    pub index: u32,
    pub x: u32,
    pub value: QRat,
}

impl EulerValue {
    pub fn new(index: u32, order: i32, x: u32) -> Self {
        let value = if order >= 0 {
            euler_order(index, order as u32, x)
        } else {
            euler_neg_order(index, order.unsigned_abs(), x)
        };
        EulerValue {
            order,
            index,
            x,
            value,
        }
    }
}

static CARLITZ: Mutex<Vec<QRat>> = Mutex::new(Vec::new());

/// `β_{0,q}, ..., β_{m,q}`.
pub fn carlitz_betas(m: u32) -> Vec<QRat> {
    let mut cache = CARLITZ.lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() <= m as usize {
        let next = carlitz_step(&cache);
        cache.push(next);
    }
    cache[..=m as usize].to_vec()
}

/// Solve `q(qβ + 1)^k - β_k = [k = 1]` for `β_k` given `β_0 .. β_{k-1}`:
/// `(q^{k+1} - 1) β_k = [k = 1] - q Σ_{i<k} C(k,i) q^i β_i`.
fn carlitz_step(prev: &[QRat]) -> QRat {
    let k = prev.len() as i64;
    if k == 0 {
        return QRat::one();
    }
    let acc: QRat = prev
        .iter()
        .enumerate()
        .map(|(i, b)| b.scale(&binom_rat(k, i as i64)).mul_q_pow(i as i64 + 1))
        .sum();
    let rhs = if k == 1 { &QRat::one() - &acc } else { -acc };
    let lead = QRat::from_poly(
        &QPoly::monomial(BigRat::from_integer(1.into()), (k + 1) as usize) - &QPoly::one(),
    );
    &rhs / &lead
}

/// Carlitz q-Bernoulli number `β_{m,q}`.
pub fn carlitz_beta(m: u32) -> QRat {
    carlitz_betas(m).pop().expect("nonempty prefix")
}

/// `∫ q^{nx} dμ_q(x) = (n+1) / [n+1]_q`.
pub fn moment_bosonic(n: u32) -> QRat {
    let n1 = n as i64 + 1;
    &QRat::from_int(n1) / &q_int(n1)
}

/// `∫ q^{nx} dμ_{-q}(x) = [2]_q / (1 + q^{n+1})`.
pub fn moment_fermionic(n: u32) -> QRat {
    &q_int(2) / &one_plus_q_pow(n as usize + 1)
}

fn one_plus_q_pow(e: usize) -> QRat {
    QRat::from_poly(&QPoly::one() + &QPoly::monomial(BigRat::from_integer(1.into()), e))
}

fn one_minus_q_pow_inv(n: u32) -> QRat {
    QRat::from_poly(QPoly::from_i64s(&[1, -1]).pow(n))
        .recip()
        .expect("1 - q is nonzero")
}

fn alternating(i: i64, term: QRat) -> QRat {
    if i % 2 == 1 {
        -term
    } else {
        term
    }
}

/// `β^{(k)}_{n,q}(x) = (1-q)^{-n} Σ_i (-1)^i C(n,i) q^{ix} Π_{j=1}^k (i+j)/[i+j]_q`.
pub fn beta_order(n: u32, k: u32, x: u32) -> QRat {
    let n = n as i64;
    let sum: QRat = (0..=n)
        .map(|i| {
            let prod: QRat = (1..=k).map(|j| moment_bosonic(i as u32 + j - 1)).product();
            alternating(i, prod.scale(&binom_rat(n, i)).mul_q_pow(i * x as i64))
        })
        .sum();
    &sum * &one_minus_q_pow_inv(n as u32)
}

/// The same value through `C(i+k,k) / binom(i+k,k)_q · k! / [k]_q!`.
pub fn beta_order_binomial_form(n: u32, k: u32, x: u32) -> QRat {
    let (n, ki) = (n as i64, k as i64);
    let ratio = qfact_ratio(k).recip().expect("nonzero");
    let sum: QRat = (0..=n)
        .map(|i| {
            let c = binom_rat(n, i) * binom_rat(i + ki, ki);
            let term = (&ratio / &gauss_binom_rat(i + ki, ki))
                .scale(&c)
                .mul_q_pow(i * x as i64);
            alternating(i, term)
        })
        .sum();
    &sum * &one_minus_q_pow_inv(n as u32)
}

/// `[k]_q! / k!`.
pub fn qfact_ratio(k: u32) -> QRat {
    QRat::from_poly(q_factorial(k)).scale(&BigRat::new(1.into(), factorial(k)))
}

/// `β^{(-k)}_{n,q}(x) = (1-q)^{-n} Σ_i (-1)^i C(n,i) binom(i+k,k)_q / C(i+k,k) · [k]_q!/k! · q^{ix}`.
pub fn beta_neg_order(n: u32, k: u32, x: u32) -> QRat {
    let (n, ki) = (n as i64, k as i64);
    let ratio = qfact_ratio(k);
    let sum: QRat = (0..=n)
        .map(|i| {
            let c = binom_rat(n, i) / binom_rat(i + ki, ki);
            let term = (&gauss_binom_rat(i + ki, ki) * &ratio)
                .scale(&c)
                .mul_q_pow(i * x as i64);
            alternating(i, term)
        })
        .sum();
    &sum * &one_minus_q_pow_inv(n as u32)
}

/// The same value with `C(n+k, n-i) / C(n+k, k)` in place of `C(n,i) / C(i+k,k)`.
pub fn beta_neg_order_shifted_form(n: u32, k: u32, x: u32) -> QRat {
    let (n, ki) = (n as i64, k as i64);
    let ratio = qfact_ratio(k);
    let sum: QRat = (0..=n)
        .map(|i| {
            let c = binom_rat(n + ki, n - i) / binom_rat(n + ki, ki);
            let term = (&gauss_binom_rat(i + ki, ki) * &ratio)
                .scale(&c)
                .mul_q_pow(i * x as i64);
            alternating(i, term)
        })
        .sum();
    &sum * &one_minus_q_pow_inv(n as u32)
}

/// `E^{(n)}_k(x,q) = [2]_q^n (1-q)^{-k} Σ_l C(k,l) (-1)^l q^{lx} / Π_{j=1}^n (1 + q^{l+j})`.
pub fn euler_order(k: u32, n: u32, x: u32) -> QRat {
    let ki = k as i64;
    let sum: QRat = (0..=ki)
        .map(|l| {
            let prod: QRat = (1..=n as usize)
                .map(|j| one_plus_q_pow(l as usize + j))
                .product();
            let term = (&QRat::q_pow(l * x as i64) / &prod).scale(&binom_rat(ki, l));
            alternating(l, term)
        })
        .sum();
    let two_n = q_int(2).pow(n as i32).expect("nonnegative power");
    &(&sum * &two_n) * &one_minus_q_pow_inv(k)
}

/// `E^{(-n)}_k(x,q) = (1-q)^{-k} [2]_q^{-n} Σ_l C(k,l) (-1)^l q^{lx} Π_{i=1}^n (1 + q^{l+i})`.
pub fn euler_neg_order(k: u32, n: u32, x: u32) -> QRat {
    euler_neg_with(k, n, x, |l| {
        (1..=n as usize)
            .map(|i| one_plus_q_pow(l as usize + i))
            .product()
    })
}

/// [`euler_neg_order`] with the product expanded by the finite q-binomial
/// theorem: `Σ_i binom(n,i)_q q^{C(i,2)} q^{(l+1)i}`.
pub fn euler_neg_order_expanded(k: u32, n: u32, x: u32) -> QRat {
    let ni = n as i64;
    euler_neg_with(k, n, x, |l| {
        (0..=ni)
            .map(|i| gauss_binom_rat(ni, i).mul_q_pow(choose2(i) + (l + 1) * i))
            .sum()
    })
}

fn euler_neg_with<F: Fn(i64) -> QRat>(k: u32, n: u32, x: u32, inner: F) -> QRat {
    let ki = k as i64;
    let sum: QRat = (0..=ki)
        .map(|l| {
            let term = (&QRat::q_pow(l * x as i64) * &inner(l)).scale(&binom_rat(ki, l));
            alternating(l, term)
        })
        .sum();
    let two_n = q_int(2).pow(-(n as i32)).expect("[2]_q is nonzero");
    &(&sum * &two_n) * &one_minus_q_pow_inv(k)
}

/// Both truncations compared by [`prop6_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesComparison {
    pub equal: bool,
    pub closed_form: QSeries,
    pub series_form: QSeries,
}

/// Compare the closed form of `E^{(n)}_k(x,q)` with its expansion through the
/// infinite q-binomial series `Σ_i binom(n+i-1,i)_q (-1)^i q^{(l+1)i}`, mod `q^order`.
pub fn prop6_check(k: u32, n: u32, x: u32, order: usize) -> Result<SeriesComparison> {
    let closed_form = euler_order(k, n, x).to_series(order)?;
    let prefactor = (&q_int(2).pow(n as i32)? * &one_minus_q_pow_inv(k)).to_series(order)?;
    let ki = k as i64;
    let mut inner = QSeries::zero(order);
    for l in 0..=ki {
        let geometric = q_binom_series(n, Sign::Minus, l + 1, order)?;
        let mut c = BigRat::from_integer(binom(ki, l));
        if l % 2 == 1 {
            c = -c;
        }
        let shifted = geometric.shift((l * x as i64) as usize).scale(&c);
        inner = &inner + &shifted;
    }
    let series_form = &prefactor * &inner;
    Ok(SeriesComparison {
        equal: closed_form == series_form,
        closed_form,
        series_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ratio, QPoly};

    fn p(c: &[i64]) -> QRat {
        QRat::from_poly(QPoly::from_i64s(c))
    }

    #[test]
    fn carlitz_first_values() {
        assert!(carlitz_beta(0).is_one());
        let b1 = carlitz_beta(1);
        assert_eq!(b1, -p(&[1, 1]).recip().unwrap());
        assert_eq!(b1.limit_q1().unwrap(), ratio(-1, 2));
        let b2 = carlitz_beta(2);
        assert_eq!(b2, &QRat::q() / &(&q_int(2) * &q_int(3)));
        assert_eq!(b2.limit_q1().unwrap(), ratio(1, 6));
    }

    #[test]
    fn moments() {
        assert!(moment_bosonic(0).is_one());
        assert_eq!(moment_bosonic(1), &QRat::from_int(2) / &q_int(2));
        assert!(moment_fermionic(0).is_one());
        assert_eq!(moment_fermionic(1), &p(&[1, 1]) / &p(&[1, 0, 1]));
    }

    #[test]
    fn higher_order_bernoulli() {
        let expected = (&p(&[4, 2]) / &(&q_int(2) * &q_int(3))).scale(&ratio(-1, 1));
        assert_eq!(beta_order(1, 2, 0), expected);
        // the single i = 0 term is k!/[k]_q!, which is 1 only for k = 1
        assert!(beta_order(0, 1, 0).is_one());
        for k in 1..=4 {
            assert_eq!(beta_order(0, k, 0), qfact_ratio(k).recip().unwrap());
        }
        for n in 0..=6 {
            assert_eq!(beta_order(n, 1, 0), carlitz_beta(n));
        }
    }

    #[test]
    fn negative_order_bernoulli() {
        for k in 1..=5 {
            assert_eq!(beta_neg_order(0, k, 0), qfact_ratio(k));
        }
        let direct =
            &p(&[1, -1]).recip().unwrap() * &(&QRat::one() - &p(&[1, 1]).scale(&ratio(1, 2)));
        assert_eq!(beta_neg_order(1, 1, 0), direct);
        assert_eq!(
            beta_neg_order(1, 1, 0),
            beta_neg_order_shifted_form(1, 1, 0)
        );
    }

    #[test]
    fn euler_values() {
        assert!(euler_order(0, 1, 0).is_one());
        let e11 = euler_order(1, 1, 0);
        assert_eq!(e11, -(&QRat::q() / &p(&[1, 0, 1])));
        assert_eq!(e11.limit_q1().unwrap(), ratio(-1, 2));
        assert!(euler_neg_order(0, 1, 0).is_one());
        let e02 = &(&p(&[1, 1]) * &p(&[1, 0, 1])) / &q_int(2).pow(2).unwrap();
        assert_eq!(euler_neg_order(0, 2, 0), e02);
        assert_eq!(euler_neg_order(3, 2, 1), euler_neg_order_expanded(3, 2, 1));
    }

    #[test]
    fn proposition_six_small() {
        let r = prop6_check(0, 1, 0, 8).unwrap();
        assert!(r.equal);
        assert_eq!(r.closed_form, QSeries::one(8));
        let r = prop6_check(1, 1, 0, 12).unwrap();
        assert!(r.equal);
        let expect = (-(&QRat::q() / &p(&[1, 0, 1]))).to_series(12).unwrap();
        assert_eq!(r.series_form, expect);
        assert!(prop6_check(2, 2, 1, 16).unwrap().equal);
    }

    #[test]
    fn tagged_values() {
        assert_eq!(BernoulliValue::carlitz(2).value, carlitz_beta(2));
        assert_eq!(EulerValue::new(1, 1, 0).value, euler_order(1, 1, 0));
        assert_eq!(EulerValue::new(1, -1, 0).value, euler_neg_order(1, 1, 0));
        assert_eq!(
            BernoulliValue::order(1, 2, 0).family,
            BernoulliFamily::Order
        );
        assert_eq!(BernoulliValue::neg_order(0, 2, 0).value, qfact_ratio(2));
    }
}
