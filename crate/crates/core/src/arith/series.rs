//! Power series in `q` truncated at a fixed order.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{BigRat, QPoly};

/// Coefficients of `q^0 .. q^(order-1)`; everything from `q^order` on is unknown.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<BigRat>,
}

impl QSeries {
    pub fn from_coeffs(coeffs: Vec<BigRat>) -> Self {
        QSeries { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| BigRat::from_integer(x.into())).collect())
    }

    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![BigRat::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = BigRat::one();
        }
        s
    }

    /// Truncate a polynomial.
    pub fn from_poly(p: &QPoly, order: usize) -> Self {
        QSeries {
            coeffs: (0..order).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by `q^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Self {
        let d = self.order();
        let mut coeffs = vec![BigRat::zero(); d];
        if k < d {
            coeffs[k..].clone_from_slice(&self.coeffs[..d - k]);
        }
        QSeries { coeffs }
    }

    /// Truncate (or keep) at a smaller order.
    pub fn truncate(&self, order: usize) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().take(order).cloned().collect(),
        }
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let d = self.order().min(rhs.order());
        QSeries {
            coeffs: (0..d).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self + &(-rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    /// Truncated Cauchy product at the smaller of the two orders.
    fn mul(self, rhs: &QSeries) -> QSeries {
        let d = self.order().min(rhs.order());
        let mut coeffs = vec![BigRat::zero(); d];
        for (i, a) in self.coeffs.iter().take(d).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(d - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_truncates_at_smaller_order() {
        let a = QSeries::from_i64s(&[1, 1, 1, 1]);
        let b = QSeries::from_i64s(&[1, -1, 0]);
        assert_eq!(&a * &b, QSeries::from_i64s(&[1, 0, 0]));
    }

    #[test]
    fn shift_drops_overflow() {
        let a = QSeries::from_i64s(&[1, 2, 3]);
        assert_eq!(a.shift(2), QSeries::from_i64s(&[0, 0, 1]));
        assert_eq!(a.shift(5), QSeries::zero(3));
    }
}
