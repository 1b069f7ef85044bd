use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::BigRat;
use crate::error::{Error, Result};

/// Check that `p` is an odd prime.
pub fn validate_prime(p: u64) -> Result<()> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::InvalidPadic(format!("p = {p} must be an odd prime")));
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return Err(Error::InvalidPadic(format!("p = {p} is not prime")));
        }
        d += 2;
    }
    Ok(())
}

/// `v_p(x)` for a nonzero integer, and the cofactor.
pub(crate) fn split_p(x: &BigInt, p: u64) -> (i64, BigInt) {
    debug_assert!(!x.is_zero());
    let pb = BigInt::from(p);
    let mut v = 0;
    let mut x = x.clone();
    loop {
        let (q, r) = x.div_rem(&pb);
        if !r.is_zero() {
            return (v, x);
        }
        x = q;
        v += 1;
    }
}

/// `v_p(r)` for a nonzero rational.
pub fn rational_valuation(r: &BigRat, p: u64) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    Some(split_p(r.numer(), p).0 - split_p(r.denom(), p).0)
}

fn mod_inverse(a: &BigUint, m: &BigUint) -> BigUint {
    let a = BigInt::from_biguint(Sign::Plus, a.clone());
    let m = BigInt::from_biguint(Sign::Plus, m.clone());
    let e = a.extended_gcd(&m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(&m).to_biguint().expect("nonnegative")
}

/// A p-adic number `p^valuation · unit`, with the unit known modulo
/// `p^precision`. Zero is `(valuation = None, unit = 0)`.
///
/// Precision is relative: a nonzero value is known modulo
/// `p^(valuation + precision)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PadicNum {
    p: u64,
    valuation: Option<i64>,
    unit: BigUint,
    precision: u32,
}

impl PadicNum {
    pub fn zero(p: u64) -> Self {
        PadicNum {
            p,
            valuation: None,
            unit: BigUint::zero(),
            precision: 0,
        }
    }

    /// Embed a rational, keeping `precision` digits of its unit part.
    pub fn from_rational(r: &BigRat, p: u64, precision: u32) -> Result<Self> {
        validate_prime(p)?;
        if precision == 0 {
            return Err(Error::PrecisionExhausted("zero digits requested".into()));
        }
        if r.is_zero() {
            return Ok(Self::zero(p));
        }
        let (vn, un) = split_p(r.numer(), p);
        let (vd, ud) = split_p(r.denom(), p);
        let modulus = BigUint::from(p).pow(precision);
        let m = BigInt::from_biguint(Sign::Plus, modulus.clone());
        let un = un.mod_floor(&m).to_biguint().unwrap();
        let ud = ud.mod_floor(&m).to_biguint().unwrap();
        let unit = (un * mod_inverse(&ud, &modulus)) % &modulus;
        Ok(PadicNum {
            p,
            valuation: Some(vn - vd),
            unit,
            precision,
        })
    }

    pub fn from_int(x: i64, p: u64, precision: u32) -> Result<Self> {
        Self::from_rational(&BigRat::from_integer(x.into()), p, precision)
    }

    /// The value with integer representative `residue`, known modulo `p^abs_precision`.
    pub fn from_residue(residue: &BigUint, p: u64, abs_precision: u32) -> Self {
        let modulus = BigUint::from(p).pow(abs_precision);
        let r = residue % &modulus;
        if r.is_zero() {
            return Self::zero(p);
        }
        let (v, u) = split_p(&BigInt::from_biguint(Sign::Plus, r), p);
        let precision = abs_precision - v as u32;
        PadicNum {
            p,
            valuation: Some(v),
            unit: u.to_biguint().unwrap(),
            precision,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        self.valuation
    }

    pub fn unit(&self) -> &BigUint {
        &self.unit
    }

    /// Relative precision (digits of the unit part).
    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// `valuation + precision`; `None` for zero.
    pub fn absolute_precision(&self) -> Option<i64> {
        self.valuation.map(|v| v + self.precision as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.valuation.is_none()
    }

    pub fn is_unit(&self) -> bool {
        self.valuation == Some(0)
    }

    fn modulus(&self) -> BigUint {
        BigUint::from(self.p).pow(self.precision)
    }

    fn check_same_p(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::InvalidPadic(format!(
                "mixed primes {} and {}",
                self.p, other.p
            )));
        }
        Ok(())
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let m = self.modulus();
        PadicNum {
            unit: (&m - &self.unit) % &m,
            ..self.clone()
        }
    }

    /// Sum with absolute precision the minimum of the operands'.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_p(other)?;
        let (va, vb) = match (self.valuation, other.valuation) {
            (None, _) => return Ok(other.clone()),
            (_, None) => return Ok(self.clone()),
            (Some(a), Some(b)) => (a, b),
        };
        let abs = self
            .absolute_precision()
            .unwrap()
            .min(other.absolute_precision().unwrap());
        let v0 = va.min(vb);
        let digits = (abs - v0) as u32;
        let pb = BigUint::from(self.p);
        let s = &self.unit * pb.pow((va - v0) as u32) + &other.unit * pb.pow((vb - v0) as u32);
        let r = Self::from_residue(&s, self.p, digits);
        Ok(match r.valuation {
            None => r,
            Some(v) => PadicNum {
                valuation: Some(v + v0),
                ..r
            },
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_p(other)?;
        let (va, vb) = match (self.valuation, other.valuation) {
            (Some(a), Some(b)) => (a, b),
            _ => return Ok(Self::zero(self.p)),
        };
        let precision = self.precision.min(other.precision);
        let m = BigUint::from(self.p).pow(precision);
        Ok(PadicNum {
            p: self.p,
            valuation: Some(va + vb),
            unit: (&self.unit * &other.unit) % &m,
            precision,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_same_p(other)?;
        let vb = other.valuation.ok_or(Error::DivisionByZero)?;
        let Some(va) = self.valuation else {
            return Ok(Self::zero(self.p));
        };
        let precision = self.precision.min(other.precision);
        let m = BigUint::from(self.p).pow(precision);
        let inv = mod_inverse(&(&other.unit % &m), &m);
        Ok(PadicNum {
            p: self.p,
            valuation: Some(va - vb),
            unit: (&self.unit * inv) % &m,
            precision,
        })
    }

    /// Drop digits so that at most `precision` remain.
    pub fn truncate(&self, precision: u32) -> Self {
        if self.is_zero() || precision >= self.precision {
            return self.clone();
        }
        let m = BigUint::from(self.p).pow(precision);
        PadicNum {
            unit: &self.unit % m,
            precision,
            ..self.clone()
        }
    }

    /// Integer representative in `[0, p^abs)` of a p-adic integer, where
    /// `abs` is the absolute precision.
    pub fn residue(&self) -> Option<BigUint> {
        match self.valuation {
            None => Some(BigUint::zero()),
            Some(v) if v >= 0 => Some(&self.unit * BigUint::from(self.p).pow(v as u32)),
            _ => None,
        }
    }

    /// Whether `self - other` vanishes to the precision both carry.
    pub fn agrees_with(&self, other: &Self) -> Result<bool> {
        Ok(self.sub(other)?.is_zero())
    }
}

/// Arithmetic operation selector for [`padic_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PadicOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn padic_arith(op: PadicOp, a: &PadicNum, b: &PadicNum) -> Result<PadicNum> {
    match op {
        PadicOp::Add => a.add(b),
        PadicOp::Sub => a.sub(b),
        PadicOp::Mul => a.mul(b),
        PadicOp::Div => a.div(b),
    }
}

impl fmt::Display for PadicNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.valuation {
            None => write!(f, "0"),
            Some(v) => {
                let abs = v + self.precision as i64;
                write!(
                    f,
                    "{}^{} * {} + O({}^{})",
                    self.p, v, self.unit, self.p, abs
                )
            }
        }
    }
}

impl fmt::Debug for PadicNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PadicNum({self})")
    }
}

/// Base-`p` digits of the unit, least significant first.
pub fn unit_digits(x: &PadicNum) -> Vec<u64> {
    let mut u = x.unit().clone();
    let pb = BigUint::from(x.p());
    (0..x.precision())
        .map(|_| {
            let (q, r) = u.div_rem(&pb);
            u = q;
            r.to_u64().unwrap()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    #[test]
    fn from_rational_examples() {
        let x = PadicNum::from_rational(&rat(10), 5, 4).unwrap();
        assert_eq!(x.valuation(), Some(1));
        assert_eq!(x.unit(), &BigUint::from(2u32));
        let h = PadicNum::from_rational(&ratio(1, 2), 5, 2).unwrap();
        assert_eq!(h.valuation(), Some(0));
        assert_eq!(h.unit(), &BigUint::from(13u32));
        assert!(PadicNum::from_rational(&rat(0), 5, 4).unwrap().is_zero());
        let neg = PadicNum::from_rational(&ratio(1, 25), 5, 3).unwrap();
        assert_eq!(neg.valuation(), Some(-2));
    }

    #[test]
    fn invalid_primes() {
        assert!(PadicNum::from_rational(&rat(1), 2, 4).is_err());
        assert!(PadicNum::from_rational(&rat(1), 9, 4).is_err());
        assert!(PadicNum::from_rational(&rat(1), 7, 0).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let a = PadicNum::from_rational(&ratio(7, 3), 5, 6).unwrap();
        assert!(a.add(&a.neg()).unwrap().is_zero());
        let x = PadicNum::from_int(10, 5, 4).unwrap();
        let y = PadicNum::from_int(3, 5, 4).unwrap();
        let xy = x.mul(&y).unwrap();
        assert_eq!(xy.valuation(), Some(1));
        assert_eq!(xy.unit(), &BigUint::from(6u32));
        let half = PadicNum::from_rational(&ratio(1, 2), 5, 8).unwrap();
        let two = PadicNum::from_int(2, 5, 8).unwrap();
        assert_eq!(
            half.mul(&two).unwrap(),
            PadicNum::from_int(1, 5, 8).unwrap()
        );
        assert_eq!(x.div(&PadicNum::zero(5)), Err(Error::DivisionByZero));
    }

    #[test]
    fn cancellation_loses_precision() {
        // 1 and 1 + 5^3 agree to three digits
        let a = PadicNum::from_int(1, 5, 6).unwrap();
        let b = PadicNum::from_int(126, 5, 6).unwrap();
        let d = b.sub(&a).unwrap();
        assert_eq!(d.valuation(), Some(3));
        assert_eq!(d.precision(), 3);
        assert_eq!(d.absolute_precision(), Some(6));
    }

    #[test]
    fn mixed_primes_rejected() {
        let a = PadicNum::from_int(1, 5, 3).unwrap();
        let b = PadicNum::from_int(1, 7, 3).unwrap();
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn digits() {
        let x = PadicNum::from_int(38, 5, 4).unwrap(); // 38 = 3 + 2*5 + 1*25
        assert_eq!(unit_digits(&x), vec![3, 2, 1, 0]);
    }
}
