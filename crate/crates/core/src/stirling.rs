//! q-Stirling numbers of both kinds.
//!
//! Two second-kind families coexist: [`stirling2_s`] is indexed like the
//! classical `S(n, k)` (partitions of an `n`-set into `k` blocks) while
//! [`stirling2_c`] uses Carlitz's bivariate indexing. They are related by
//! `stirling2_c(n, k) == stirling2_s(n + k, n)`, which the audit verifies.

use crate::arith::{QPoly, QRat};
use crate::qcore::{binom_rat, choose2, delta_q, gauss_binom, q_factorial, q_int, q_int_poly};

/// Which definition produced a Stirling value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// Alternating q-binomial sum over `[k-j]_q^n`.
    S2Sum,
    /// `q`-difference operator applied to `x -> [x]_q^n`.
    S2Delta,
    /// Carlitz's bivariate form with exact division by `(q-1)^k`.
    C2,
    /// Coefficient of `[x]_q^k` in `Π_{j<n} ([x]_q - [j]_q)`.
    S1Product,
    /// Closed form with a `(q-1)^{n-j}` denominator.
    S1Closed,
}

/// A Stirling value tagged with its family and indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingValue {
    pub kind: StirlingKind,
    pub n: u32,
    pub k: u32,
    pub value: QRat,
}

impl StirlingValue {
    pub fn compute(kind: StirlingKind, n: u32, k: u32) -> Self {
        let value = match kind {
            StirlingKind::S2Sum => stirling2_s(n, k),
            StirlingKind::S2Delta => stirling2_delta(n, k),
            StirlingKind::C2 => stirling2_c(n, k),
            StirlingKind::S1Product => stirling1(n, k),
            StirlingKind::S1Closed => stirling1_closed(n, k),
        };
        StirlingValue { kind, n, k, value }
    }
}

fn normalizer(k: u32) -> QRat {
    QRat::from_poly(q_factorial(k))
        .recip()
        .expect("q-factorial is nonzero")
        .mul_q_pow(-choose2(k as i64))
}

/// `q^{-C(k,2)} / [k]_q! · Σ_j (-1)^j q^{C(j,2)} binom(k,j)_q [k-j]_q^n`.
pub fn stirling2_s(n: u32, k: u32) -> QRat {
    let ki = k as i64;
    let sum: QPoly = (0..=ki)
        .map(|j| {
            let term = (&gauss_binom(ki, j) * &q_int_poly((ki - j) as u32).pow(n))
                .shift_up(choose2(j) as usize);
            if j % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .fold(QPoly::zero(), |acc, t| &acc + &t);
    &QRat::from_poly(sum) * &normalizer(k)
}

/// `q^{-C(k,2)} / [k]_q! · Δ_q^k [x]_q^n |_{x=0}`.
pub fn stirling2_delta(n: u32, k: u32) -> QRat {
    let values: Vec<QRat> = (0..=k as i64)
        .map(|j| q_int(j).pow(n as i32).expect("nonnegative power"))
        .collect();
    let delta = delta_q(k, &values).expect("arity matches");
    &delta * &normalizer(k)
}

/// `(q-1)^{-k} Σ_{j=0}^k (-1)^{k-j} C(k+n, k-j) binom(j+n, j)_q`.
pub fn stirling2_c(n: u32, k: u32) -> QRat {
    let (n, k) = (n as i64, k as i64);
    let sum: QPoly = (0..=k)
        .map(|j| {
            let term = gauss_binom(j + n, j).scale(&binom_rat(k + n, k - j));
            if (k - j) % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .fold(QPoly::zero(), |acc, t| &acc + &t);
    let q_minus_1 = QPoly::from_i64s(&[-1, 1]).pow(k as u32);
    QRat::from_poly(
        sum.div_exact(&q_minus_1)
            .expect("(q-1)^k divides the Carlitz sum"),
    )
}

/// All coefficients of `Π_{j=0}^{n-1} (X - [j]_q)` in ascending powers of `X`.
pub fn stirling1_row(n: u32) -> Vec<QPoly> {
    let mut row = vec![QPoly::one()];
    for j in 0..n {
        let root = q_int_poly(j);
        let mut next = vec![QPoly::zero(); row.len() + 1];
        for (i, c) in row.iter().enumerate() {
            next[i + 1] = &next[i + 1] + c;
            next[i] = &next[i] - &(c * &root);
        }
        row = next;
    }
    row
}

/// q-Stirling number of the first kind: coefficient of `[x]_q^k` in
/// `q^{C(n,2)} [x]_{n,q} = Π_{j=0}^{n-1} ([x]_q - [j]_q)`.
pub fn stirling1(n: u32, k: u32) -> QRat {
    if k > n {
        return QRat::zero();
    }
    QRat::from_poly(stirling1_row(n).swap_remove(k as usize))
}

/// `q^{C(n,2)} / (q-1)^{n-j} Σ_{k=j}^n (-1)^{n-k} q^{C(k+1,2) - nk} binom(n,k)_q C(k,j)`.
pub fn stirling1_closed(n: u32, j: u32) -> QRat {
    if j > n {
        return QRat::zero();
    }
    let (n, j) = (n as i64, j as i64);
    let sum: QRat = (j..=n)
        .map(|k| {
            let term = QRat::from_poly(gauss_binom(n, k).scale(&binom_rat(k, j)))
                .mul_q_pow(choose2(k + 1) - n * k);
            if (n - k) % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum();
    let den = QRat::from_poly(QPoly::from_i64s(&[-1, 1]).pow((n - j) as u32));
    (&sum / &den).mul_q_pow(choose2(n))
}
