//! Classical (q = 1) number families, computed by their textbook recurrences.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::BigRat;
use crate::qcore::binom;

/// Bernoulli numbers `B_0 ..= B_m` with `B_1 = -1/2`, from
/// `Σ_{k=0}^{m} C(m+1, k) B_k = 0`.
pub fn bernoulli_numbers(m: u32) -> Vec<BigRat> {
    let mut b: Vec<BigRat> = Vec::with_capacity(m as usize + 1);
    for n in 0..=m as i64 {
        if n == 0 {
            b.push(BigRat::from_integer(1.into()));
            continue;
        }
        let s: BigRat = (0..n)
            .map(|k| BigRat::from_integer(binom(n + 1, k)) * &b[k as usize])
            .fold(BigRat::zero(), |a, x| a + x);
        b.push(-s / BigRat::from_integer(BigInt::from(n + 1)));
    }
    b
}

/// Stirling numbers of the second kind, `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn stirling2(n: u32, k: u32) -> BigInt {
    table(n, |i, j, t: &[Vec<BigInt>]| {
        &t[i - 1][j] * BigInt::from(j) + &t[i - 1][j - 1]
    })[n as usize]
        .get(k as usize)
        .cloned()
        .unwrap_or_default()
}

/// Signed Stirling numbers of the first kind, `s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)`.
pub fn stirling1_signed(n: u32, k: u32) -> BigInt {
    table(n, |i, j, t: &[Vec<BigInt>]| {
        &t[i - 1][j - 1] - &t[i - 1][j] * BigInt::from(i - 1)
    })[n as usize]
        .get(k as usize)
        .cloned()
        .unwrap_or_default()
}

fn table<F>(n: u32, step: F) -> Vec<Vec<BigInt>>
where
    F: Fn(usize, usize, &[Vec<BigInt>]) -> BigInt,
{
    let n = n as usize;
    let mut t = vec![vec![BigInt::zero(); n + 2]; n + 1];
    t[0][0] = BigInt::from(1);
    for i in 1..=n {
        for j in 1..=i {
            t[i][j] = step(i, j, &t);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_numbers(10);
        assert_eq!(b[1], ratio(-1, 2));
        assert_eq!(b[2], ratio(1, 6));
        assert_eq!(b[4], ratio(-1, 30));
        assert_eq!(b[10], ratio(5, 66));
        assert!(b[9].is_zero());
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(5, 2), BigInt::from(15));
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling1_signed(4, 2), BigInt::from(11));
        assert_eq!(stirling1_signed(4, 1), BigInt::from(-6));
        assert_eq!(stirling1_signed(3, 5), BigInt::zero());
    }
}
