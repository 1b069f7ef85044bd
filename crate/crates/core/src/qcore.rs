//! q-integers, q-factorials, Gaussian binomials, q-falling factorials, the
//! q-difference operator and the finite and infinite q-binomial formulae.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{BigRat, QPoly, QRat, QSeries};
use crate::error::{Error, Result};

/// Classical binomial coefficient, zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binom_rat(n: i64, k: i64) -> BigRat {
    BigRat::from_integer(binom(n, k))
}

/// `k (k - 1) / 2`, the exponent in `q^{C(k,2)}`; valid for negative `k` too.
pub fn choose2(k: i64) -> i64 {
    k * (k - 1) / 2
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `1 + q + ... + q^(n-1)`.
pub fn q_int_poly(n: u32) -> QPoly {
    QPoly::from_coeffs(vec![BigRat::one(); n as usize])
}

/// `[n]_q = (1 - q^n) / (1 - q)` for any integer `n`; `[-n]_q = -q^{-n} [n]_q`.
pub fn q_int(n: i64) -> QRat {
    if n >= 0 {
        QRat::from_poly(q_int_poly(n as u32))
    } else {
        -QRat::from_poly(q_int_poly((-n) as u32)).mul_q_pow(n)
    }
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`.
pub fn q_factorial(n: u32) -> QPoly {
    (2..=n).fold(QPoly::one(), |acc, i| &acc * &q_int_poly(i))
}

/// Gaussian binomial coefficient via the product form
/// `[n][n-1]...[n-k+1] / [k]!`, dividing exactly.
pub fn gauss_binom(n: i64, k: i64) -> QPoly {
    if n < 0 || k < 0 || k > n {
        return QPoly::zero();
    }
    let k = k.min(n - k);
    let mut top = QPoly::one();
    for i in 0..k {
        top = &top * &q_int_poly((n - i) as u32);
    }
    top.div_exact(&q_factorial(k as u32))
        .expect("q-factorial divides the falling product")
}

pub fn gauss_binom_rat(n: i64, k: i64) -> QRat {
    QRat::from_poly(gauss_binom(n, k))
}

/// Gaussian binomial by brute force: the sum of `q^{d_1 + 2 d_2 + ... + k d_k}`
/// over all `(d_0, ..., d_k)` of nonnegative integers summing to `n - k`.
pub fn gauss_binom_partition_oracle(n: u32, k: u32) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    let rest = (n - k) as usize;
    let mut counts = vec![BigInt::zero(); rest * k as usize + 1];
    // d_1..d_k chosen freely with sum <= rest; d_0 takes up the slack.
    fn walk(idx: u32, k: u32, left: usize, exp: usize, counts: &mut [BigInt]) {
        if idx > k {
            counts[exp] += 1;
            return;
        }
        for d in 0..=left {
            walk(idx + 1, k, left - d, exp + idx as usize * d, counts);
        }
    }
    walk(1, k, rest, 0, &mut counts);
    QPoly::from_ints(counts)
}

/// `[x]_{k,q} = [x]_q [x-1]_q ... [x-k+1]_q`.
pub fn q_falling(x: i64, k: u32) -> QRat {
    (0..k as i64).map(|i| q_int(x - i)).product()
}

/// `Δ_q^n f(0) = Σ_k binom(n,k)_q (-1)^k q^{C(k,2)} f(n-k)` from the values `f(0..=n)`.
pub fn delta_q(n: u32, f: &[QRat]) -> Result<QRat> {
    let expected = n as usize + 1;
    if f.len() != expected {
        return Err(Error::ArityError {
            expected,
            got: f.len(),
        });
    }
    let n = n as i64;
    Ok((0..=n)
        .map(|k| {
            let term =
                (QRat::from_poly(gauss_binom(n, k)) * &f[(n - k) as usize]).mul_q_pow(choose2(k));
            if k % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum())
}

/// `Δ_q^n f(0)` by applying the operator product `Π_{i=1}^n (E - q^{i-1} I)`
/// to the value sequence directly.
pub fn delta_q_operator(n: u32, f: &[QRat]) -> Result<QRat> {
    let expected = n as usize + 1;
    if f.len() != expected {
        return Err(Error::ArityError {
            expected,
            got: f.len(),
        });
    }
    let mut seq = f.to_vec();
    for i in 1..=n as i64 {
        seq = seq
            .windows(2)
            .map(|w| &w[1] - &w[0].mul_q_pow(i - 1))
            .collect();
    }
    Ok(seq.pop().expect("one value remains"))
}

/// Expansion of `Π_{i=1}^n (a + b q^{i-1})` as a polynomial in `q`.
pub fn q_binom_product(n: u32, a: &BigRat, b: &BigRat) -> QPoly {
    (0..n as usize).fold(QPoly::one(), |acc, i| {
        let factor = &QPoly::constant(a.clone()) + &QPoly::monomial(b.clone(), i);
        &acc * &factor
    })
}

/// Sign of the substituted `b = ±q^j` in [`q_binom_series`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `Σ_{k>=0} binom(n+k-1, k)_q b^k` with `b = ±q^shift`, truncated at `order`.
///
/// This is the series of `Π_{i=1}^n (1 - b q^{i-1})^{-1}`.
pub fn q_binom_series(n: u32, sign: Sign, shift: i64, order: usize) -> Result<QSeries> {
    if shift < 1 {
        return Err(Error::SeriesDomainError(shift));
    }
    let n = n as i64;
    let mut acc = QPoly::zero();
    let mut k = 0i64;
    while (shift * k) < order as i64 {
        let mut term = gauss_binom(n + k - 1, k).shift_up((shift * k) as usize);
        if sign == Sign::Minus && k % 2 == 1 {
            term = -term;
        }
        acc = &acc + &term;
        k += 1;
    }
    Ok(QSeries::from_poly(&acc, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(3), QRat::from_poly(p(&[1, 1, 1])));
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(-1), -QRat::q_pow(-1));
        assert_eq!(q_int(-2), -(QRat::from_poly(p(&[1, 1])).mul_q_pow(-2)));
    }

    #[test]
    fn q_factorials() {
        assert!(q_factorial(0).is_one());
        assert_eq!(q_factorial(2), p(&[1, 1]));
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn gauss_binomials() {
        for n in 0..6 {
            assert!(gauss_binom(n, 0).is_one());
            assert!(gauss_binom(n, n).is_one());
        }
        assert_eq!(gauss_binom(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(
            QRat::from_poly(gauss_binom(5, 2)).limit_q1().unwrap(),
            rat(10)
        );
        assert!(gauss_binom(3, 4).is_zero());
        assert!(gauss_binom(3, -1).is_zero());
    }

    #[test]
    fn partition_oracle_small_cases() {
        assert!(gauss_binom_partition_oracle(5, 5).is_one());
        assert!(gauss_binom_partition_oracle(7, 0).is_one());
        assert_eq!(gauss_binom_partition_oracle(4, 2), p(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn falling_factorials() {
        assert!(q_falling(5, 0).is_one());
        assert!(q_falling(2, 3).is_zero());
        let expect = QRat::from_poly(&p(&[1, 1, 1]) * &p(&[1, 1]));
        assert_eq!(q_falling(3, 2), expect);
        assert_eq!(
            q_falling(3, 2),
            QRat::from_poly(&gauss_binom(3, 2) * &q_factorial(2))
        );
    }

    #[test]
    fn difference_operator() {
        let f = [q_int(7)];
        assert_eq!(delta_q(0, &f).unwrap(), q_int(7));
        assert_eq!(delta_q(1, &[q_int(0), q_int(1)]).unwrap(), QRat::one());
        let ones = vec![QRat::one(); 3];
        assert!(delta_q(2, &ones).unwrap().is_zero());
        assert_eq!(
            delta_q(2, &ones[..2]),
            Err(Error::ArityError {
                expected: 3,
                got: 2
            })
        );
        let g: Vec<QRat> = (0..5).map(|j| q_int(j).pow(3).unwrap()).collect();
        assert_eq!(delta_q(4, &g).unwrap(), delta_q_operator(4, &g).unwrap());
    }

    #[test]
    fn finite_product() {
        assert!(q_binom_product(0, &rat(3), &rat(5)).is_one());
        assert_eq!(q_binom_product(2, &rat(1), &rat(1)), p(&[2, 2]));
        assert!(q_binom_product(3, &rat(1), &rat(-1)).is_zero());
        let half = ratio(1, 2);
        assert_eq!(
            q_binom_product(1, &half, &rat(2)),
            QPoly::constant(ratio(5, 2))
        );
    }

    #[test]
    fn infinite_series() {
        assert_eq!(
            q_binom_series(1, Sign::Plus, 1, 4).unwrap(),
            QSeries::from_i64s(&[1, 1, 1, 1])
        );
        assert_eq!(
            q_binom_series(1, Sign::Minus, 1, 4).unwrap(),
            QSeries::from_i64s(&[1, -1, 1, -1])
        );
        let inv = QRat::from_poly(&p(&[1, 1]) * &p(&[1, 0, 1]))
            .recip()
            .unwrap();
        assert_eq!(
            q_binom_series(2, Sign::Minus, 1, 12).unwrap(),
            inv.to_series(12).unwrap()
        );
        assert_eq!(
            q_binom_series(2, Sign::Plus, 0, 4),
            Err(Error::SeriesDomainError(0))
        );
    }

    #[test]
    fn classical_binomials() {
        assert_eq!(binom(10, 3), BigInt::from(120));
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(choose2(0), 0);
        assert_eq!(choose2(5), 10);
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
