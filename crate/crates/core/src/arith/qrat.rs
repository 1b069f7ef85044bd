//! Rational functions of `q` in canonical reduced form.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{BigRat, QPoly, QSeries};
use crate::error::{Error, Result};

/// A reduced fraction `num / den` of polynomials in `q`.
///
/// Canonical form: `den` is monic, `gcd(num, den) = 1`, and zero is `0 / 1`.
/// Two values are equal as rational functions iff they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    pub fn zero() -> Self {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn q() -> Self {
        Self::from_poly(QPoly::q())
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(QPoly::from_int(c))
    }

    pub fn from_bigrat(c: BigRat) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_bigrat(BigRat::new(n.into(), d.into()))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = QPoly::monomial(BigRat::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            QRat {
                num: QPoly::one(),
                den: m,
            }
        }
    }

    /// Build `num / den` and bring it to canonical form.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let k = num.low_degree().unwrap().min(den.low_degree().unwrap());
        let (num, den) = if k > 0 {
            (num.shift_down(k), den.shift_down(k))
        } else {
            (num, den)
        };
        if den.is_constant() {
            let inv = den.coeffs()[0].recip();
            return Self::from_poly(num.scale(&inv));
        }
        if let Some(quot) = num.div_exact(&den) {
            return Self::from_poly(quot);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Self::make_monic(num, den)
    }

    fn make_monic(num: QPoly, den: QPoly) -> Self {
        let lc = den.leading().unwrap().clone();
        if lc.is_one() {
            QRat { num, den }
        } else {
            let inv = lc.recip();
            QRat {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// The constant value, if this is a constant rational function.
    pub fn as_constant(&self) -> Option<BigRat> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::make_monic(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QRat) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            Ok(QRat {
                num: self.num.pow(e as u32),
                den: self.den.pow(e as u32),
            })
        } else {
            self.recip()?.pow(-e)
        }
    }

    /// Multiply by `q^k`.
    pub fn mul_q_pow(&self, k: i64) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let ku = k.unsigned_abs() as usize;
        if k > 0 {
            let low = self.den.low_degree().unwrap_or(0).min(ku);
            QRat {
                num: self.num.shift_up(ku - low),
                den: self.den.shift_down(low),
            }
        } else {
            let low = self.num.low_degree().unwrap_or(0).min(ku);
            QRat {
                num: self.num.shift_down(low),
                den: self.den.shift_up(ku - low),
            }
        }
    }

    /// Exact value at `q = q0`.
    pub fn eval(&self, q0: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::EvalAtPole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// The limit as `q -> 1`, by cancelling common factors of `q - 1`.
    pub fn limit_q1(&self) -> Result<BigRat> {
        let q_minus_1 = QPoly::from_i64s(&[-1, 1]);
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        loop {
            let d1 = den.eval_one();
            if !d1.is_zero() {
                return Ok(num.eval_one() / d1);
            }
            if !num.eval_one().is_zero() {
                return Err(Error::PoleAtOne);
            }
            num = num.div_exact(&q_minus_1).expect("root at 1");
            den = den.div_exact(&q_minus_1).expect("root at 1");
        }
    }

    /// Maclaurin coefficients of `q^0 .. q^(order-1)`.
    pub fn to_series(&self, order: usize) -> Result<QSeries> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::SeriesAtPole);
        }
        let inv = d0.recip();
        let mut out: Vec<BigRat> = Vec::with_capacity(order);
        for i in 0..order {
            let mut acc = self.num.coeff(i);
            for (j, dj) in self.den.coeffs().iter().enumerate().skip(1).take(i) {
                if !dj.is_zero() {
                    acc -= dj * &out[i - j];
                }
            }
            out.push(acc * &inv);
        }
        Ok(QSeries::from_coeffs(out))
    }

    /// Sum `Σ_k f(k)` over an index range.
    pub fn sum_over<I, F>(iter: I, f: F) -> QRat
    where
        I: IntoIterator,
        F: FnMut(I::Item) -> QRat,
    {
        iter.into_iter().map(f).sum()
    }
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QRat {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigRat> for QRat {
    fn from(c: BigRat) -> Self {
        Self::from_bigrat(c)
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return QRat::from_poly(&self.num + &rhs.num);
            }
            return QRat::normalize(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return QRat::make_monic_checked(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return QRat::make_monic_checked(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        // Henrici: only the gcd of the denominators can survive in the sum.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return QRat::make_monic_checked(num, &self.den * &rhs.den);
        }
        let b = self.den.div_exact(&g).unwrap();
        let d = rhs.den.div_exact(&g).unwrap();
        let t = &(&self.num * &d) + &(&rhs.num * &b);
        if t.is_zero() {
            return QRat::zero();
        }
        let den = &b * &rhs.den;
        let h = t.gcd(&g);
        if h.is_one() {
            QRat::make_monic(t, den)
        } else {
            QRat::make_monic(t.div_exact(&h).unwrap(), den.div_exact(&h).unwrap())
        }
    }
}

impl QRat {
    fn make_monic_checked(num: QPoly, den: QPoly) -> QRat {
        if num.is_zero() {
            QRat::zero()
        } else {
            QRat::make_monic(num, den)
        }
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRat::from_poly(&self.num * &rhs.num);
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let cancel = |p: &QPoly, g: &QPoly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).unwrap()
            }
        };
        let num = &cancel(&self.num, &g1) * &cancel(&rhs.num, &g2);
        let den = &cancel(&self.den, &g2) * &cancel(&rhs.den, &g1);
        QRat::make_monic(num, den)
    }
}

impl Div for &QRat {
    type Output = QRat;
    /// Panics on division by zero; use [`QRat::checked_div`] for a fallible form.
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs)
            .expect("division by the zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QRat {
            type Output = QRat;
            fn $m(self, rhs: QRat) -> QRat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QRat> for QRat {
            type Output = QRat;
            fn $m(self, rhs: &QRat) -> QRat {
                (&self).$m(rhs)
            }
        }
        impl $tr<QRat> for &QRat {
            type Output = QRat;
            fn $m(self, rhs: QRat) -> QRat {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl Sum for QRat {
    fn sum<I: Iterator<Item = QRat>>(iter: I) -> QRat {
        iter.fold(QRat::zero(), |acc, x| &acc + &x)
    }
}

impl<'a> Sum<&'a QRat> for QRat {
    fn sum<I: Iterator<Item = &'a QRat>>(iter: I) -> QRat {
        iter.fold(QRat::zero(), |acc, x| &acc + x)
    }
}

impl Product for QRat {
    fn product<I: Iterator<Item = QRat>>(iter: I) -> QRat {
        iter.fold(QRat::one(), |acc, x| &acc * &x)
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::fmt::canonical(self))
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QRat {
        QRat::from_poly(QPoly::from_i64s(c))
    }

    fn r(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = p(&[1, -1]);
        assert!((&a * &a.recip().unwrap()).is_one());
    }

    #[test]
    fn factor_cancellation_in_division() {
        assert_eq!(&p(&[1, 0, -1]) / &p(&[1, -1]), p(&[1, 1]));
    }

    #[test]
    fn sum_with_common_factor() {
        // 1 - 1/(1+q) = q/(1+q); at q = 2 this is 2/3
        let s = &QRat::one() - &p(&[1, 1]).recip().unwrap();
        assert_eq!(s, &QRat::q() / &p(&[1, 1]));
        assert_eq!(s.eval(&r(2, 1)).unwrap(), r(2, 3));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            QRat::one().checked_div(&QRat::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            QRat::new(QPoly::one(), QPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 1, 1]).eval(&r(2, 1)).unwrap(), r(7, 1));
        let inv = p(&[1, 1]).recip().unwrap();
        assert_eq!(inv.eval(&r(1, 1)).unwrap(), r(1, 2));
        let b2 = &QRat::q() / &(&p(&[1, 1]) * &p(&[1, 1, 1]));
        assert_eq!(b2.eval(&r(1, 1)).unwrap(), r(1, 6));
        assert!(matches!(inv.eval(&r(-1, 1)), Err(Error::EvalAtPole(_))));
    }

    #[test]
    fn limits_at_one() {
        assert_eq!(p(&[1, 1, 1, 1, 1]).limit_q1().unwrap(), r(5, 1));
        let x = &p(&[1, 0, 0, -1]) / &p(&[1, -1]);
        assert_eq!(x.limit_q1().unwrap(), r(3, 1));
        assert_eq!(
            p(&[1, -1]).recip().unwrap().limit_q1(),
            Err(Error::PoleAtOne)
        );
    }

    #[test]
    fn series_examples() {
        let s = p(&[1, 1]).recip().unwrap().to_series(4).unwrap();
        assert_eq!(s, QSeries::from_i64s(&[1, -1, 1, -1]));
        let s = p(&[1, -1]).recip().unwrap().to_series(3).unwrap();
        assert_eq!(s, QSeries::from_i64s(&[1, 1, 1]));
        let s = (&p(&[1, 1]) / &p(&[1, 1])).to_series(2).unwrap();
        assert_eq!(s, QSeries::from_i64s(&[1, 0]));
        assert_eq!(QRat::q_pow(-1).to_series(3), Err(Error::SeriesAtPole));
    }

    #[test]
    fn negative_powers_of_q() {
        let x = QRat::q_pow(-3);
        assert_eq!(x.mul_q_pow(3), QRat::one());
        assert_eq!(x.mul_q_pow(5), QRat::q_pow(2));
        assert_eq!(QRat::q_pow(2).mul_q_pow(-5), QRat::q_pow(-3));
        let y = &p(&[1, 1]) / &p(&[0, 1, 2]);
        assert_eq!(y.mul_q_pow(1), &p(&[1, 1]) / &p(&[1, 2]));
    }
}
