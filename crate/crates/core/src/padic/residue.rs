//! Residue arithmetic modulo `p^W` for the Riemann-sum loops.
//!
//! Moduli below 2^63 run on `u64` with `u128` products; larger moduli fall
//! back to `BigUint`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

pub trait ResidueRing: Sync + Send {
    type Elem: Clone + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn reduce(&self, x: &BigUint) -> Self::Elem;
    fn to_big(&self, x: &Self::Elem) -> BigUint;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `[a^0, a^1, ..., a^len-1]`.
    fn powers(&self, a: &Self::Elem, len: usize) -> Vec<Self::Elem> {
        let mut out = Vec::with_capacity(len);
        let mut cur = self.one();
        for _ in 0..len {
            out.push(cur.clone());
            cur = self.mul(&cur, a);
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SmallMod {
    m: u64,
}

impl SmallMod {
    pub fn new(m: u64) -> Self {
        assert!(m > 1 && m < (1 << 63));
        SmallMod { m }
    }
}

impl ResidueRing for SmallMod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn reduce(&self, x: &BigUint) -> u64 {
        (x % self.m).to_u64().expect("reduced below modulus")
    }
    fn to_big(&self, x: &u64) -> BigUint {
        BigUint::from(*x)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.m {
            s - self.m
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + (self.m - b)
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.m as u128) as u64
    }
}

#[derive(Debug, Clone)]
pub struct BigMod {
    m: BigUint,
}

impl BigMod {
    pub fn new(m: BigUint) -> Self {
        BigMod { m }
    }
}

impl ResidueRing for BigMod {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn reduce(&self, x: &BigUint) -> BigUint {
        x % &self.m
    }
    fn to_big(&self, x: &BigUint) -> BigUint {
        x.clone()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= self.m {
            s - &self.m
        } else {
            s
        }
    }
    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            a + &self.m - b
        }
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % &self.m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn backends_agree() {
        let m = 5u64.pow(20);
        let small = SmallMod::new(m);
        let big = BigMod::new(BigUint::from(m));
        let a = 123_456_789_012u64;
        let b = 98_765_432_109u64;
        let (ba, bb) = (BigUint::from(a), BigUint::from(b));
        assert_eq!(small.to_big(&small.mul(&a, &b)), big.mul(&ba, &bb));
        assert_eq!(small.to_big(&small.sub(&b, &a)), big.sub(&bb, &ba));
        assert_eq!(small.to_big(&small.pow(&a, 77)), big.pow(&ba, 77));
        assert_eq!(small.add(&small.neg(&a), &a), 0);
    }
}
