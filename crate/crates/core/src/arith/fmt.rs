//! Canonical text and LaTeX renderings of [`QRat`] values.
//!
//! The canonical form scales numerator and denominator to integer
//! polynomials with jointly coprime coefficients and a positive leading
//! denominator coefficient, then prints terms in ascending powers of `q`:
//! `(-1)/(1 + q)`, `1 + q + 2q^2`, `1/2`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{BigRat, QRat};

/// Integer numerator and denominator coefficient vectors of the canonical form.
pub fn integer_parts(x: &QRat) -> (Vec<BigInt>, Vec<BigInt>) {
    let num = x.numer().coeffs();
    let den = x.denom().coeffs();
    let lcm = num
        .iter()
        .chain(den.iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scale = |cs: &[BigRat]| -> Vec<BigInt> {
        cs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
    };
    let mut n = scale(num);
    let mut d = scale(den);
    let g = n
        .iter()
        .chain(d.iter())
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        n.iter_mut().for_each(|c| *c /= &g);
        d.iter_mut().for_each(|c| *c /= &g);
    }
    // den is monic over Q, so its scaled leading coefficient is already positive
    (n, d)
}

fn poly_text(cs: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in cs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let var = match i {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{i}"),
        };
        if i == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&var);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The canonical serialization used in reports and tables.
pub fn canonical(x: &QRat) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    if let Some(c) = x.as_constant() {
        return c.to_string();
    }
    let (n, d) = integer_parts(x);
    if d.len() == 1 && d[0].is_one() {
        poly_text(&n)
    } else {
        format!("({})/({})", poly_text(&n), poly_text(&d))
    }
}

fn poly_latex(cs: &[BigInt]) -> String {
    poly_text(cs)
        .split(' ')
        .map(|tok| match tok.find("q^") {
            Some(pos) => format!("{}q^{{{}}}", &tok[..pos], &tok[pos + 2..]),
            None => tok.to_string(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// LaTeX rendering, `\frac{..}{..}` when the denominator is nontrivial.
pub fn latex(x: &QRat) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    if let Some(c) = x.as_constant() {
        return rat_latex(&c);
    }
    let (n, d) = integer_parts(x);
    if d.len() == 1 && d[0].is_one() {
        poly_latex(&n)
    } else {
        format!("\\frac{{{}}}{{{}}}", poly_latex(&n), poly_latex(&d))
    }
}

pub fn rat_latex(c: &BigRat) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        let sign = if c.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", c.numer().abs(), c.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::QPoly;

    fn p(c: &[i64]) -> QRat {
        QRat::from_poly(QPoly::from_i64s(c))
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(canonical(&p(&[1, 1, 2, 1, 1])), "1 + q + 2q^2 + q^3 + q^4");
        assert_eq!(canonical(&(-&p(&[1, 1]).recip().unwrap())), "(-1)/(1 + q)");
        let b2 = &QRat::q() / &p(&[1, 2, 2, 1]);
        assert_eq!(canonical(&b2), "(q)/(1 + 2q + 2q^2 + q^3)");
        assert_eq!(canonical(&QRat::from_ratio(-1, 30)), "-1/30");
        assert_eq!(canonical(&QRat::zero()), "0");
        assert_eq!(
            canonical(&p(&[1, -1]).scale(&BigRat::new(1.into(), 2.into()))),
            "(1 - q)/(2)"
        );
        assert_eq!(canonical(&QRat::q_pow(-2)), "(1)/(q^2)");
        assert_eq!(canonical(&p(&[0, -2, 0, -1])), "-2q - q^3");
    }

    #[test]
    fn latex_strings() {
        assert_eq!(latex(&p(&[1, 0, 3])), "1 + 3q^{2}");
        assert_eq!(latex(&(&QRat::q() / &p(&[1, 1]))), "\\frac{q}{1 + q}");
        assert_eq!(latex(&QRat::from_ratio(-1, 2)), "-\\frac{1}{2}");
    }
}
