//! The integrand catalog and its exponential-polynomial expansions.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::arith::QRat;
use crate::bernoulli::{carlitz_beta, euler_order, moment_bosonic, moment_fermionic};
use crate::error::{Error, Result};
use crate::qcore::{binom_rat, choose2, gauss_binom, q_factorial};

/// Bosonic `μ_q` or fermionic `μ_{-q}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    Bosonic,
    Fermionic,
}

impl Measure {
    /// `∫ q^{e x} dμ(x)`.
    pub fn moment(self, e: u32) -> QRat {
        match self {
            Measure::Bosonic => moment_bosonic(e),
            Measure::Fermionic => moment_fermionic(e),
        }
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bosonic" => Ok(Measure::Bosonic),
            "fermionic" => Ok(Measure::Fermionic),
            _ => Err(Error::InvalidArgument(format!("unknown measure `{s}`"))),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Measure::Bosonic => "bosonic",
            Measure::Fermionic => "fermionic",
        })
    }
}

/// Catalog of integrands with exact closed-form integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegrandSpec {
    /// `x -> [x]_q^m`
    PowQ(u32),
    /// `x -> binom(x, n)_q`
    GaussBinom(u32),
    /// `x -> q^{m x}`
    QExp(u32),
    /// `(x_1..x_k) -> q^{Σ_l (k-l+i) x_l}`
    MultiExp { k: u32, i: u32 },
    /// `(x_1..x_n) -> [x_1 + .. + x_n + x]_q^k q^{Σ_j (n-j) x_j}`
    MultiEulerPow { n: u32, k: u32, x: u32 },
}

/// A multivariate integrand of the form
/// `Π_l q^{exps[l] x_l} · [x_1 + .. + x_d + shift]_q^power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialShape {
    pub exps: Vec<u32>,
    pub power: u32,
    pub shift: u32,
}

impl IntegrandSpec {
    /// Number of integration variables.
    pub fn arity(&self) -> usize {
        match *self {
            IntegrandSpec::PowQ(_) | IntegrandSpec::GaussBinom(_) | IntegrandSpec::QExp(_) => 1,
            IntegrandSpec::MultiExp { k, .. } => k as usize,
            IntegrandSpec::MultiEulerPow { n, .. } => n as usize,
        }
    }

    pub fn is_multivariate(&self) -> bool {
        matches!(
            self,
            IntegrandSpec::MultiExp { .. } | IntegrandSpec::MultiEulerPow { .. }
        )
    }

    /// Shape for the direct summation loop; `None` for [`IntegrandSpec::GaussBinom`].
    pub fn shape(&self) -> Option<MonomialShape> {
        Some(match *self {
            IntegrandSpec::PowQ(m) => MonomialShape {
                exps: vec![0],
                power: m,
                shift: 0,
            },
            IntegrandSpec::QExp(m) => MonomialShape {
                exps: vec![m],
                power: 0,
                shift: 0,
            },
            IntegrandSpec::GaussBinom(_) => return None,
            IntegrandSpec::MultiExp { k, i } => MonomialShape {
                exps: (1..=k).map(|l| k - l + i).collect(),
                power: 0,
                shift: 0,
            },
            IntegrandSpec::MultiEulerPow { n, k, x } => MonomialShape {
                exps: (1..=n).map(|j| n - j).collect(),
                power: k,
                shift: x,
            },
        })
    }

    /// Expansion as `Σ c · q^{Σ_l e_l x_l}` with coefficients in `Q(q)`.
    pub fn exp_poly(&self) -> ExpPoly {
        match *self {
            IntegrandSpec::GaussBinom(n) => gauss_binom_exp_poly(n),
            _ => {
                let shape = self.shape().expect("monomial shape");
                let k = shape.power as i64;
                let scale = QRat::from_poly(crate::arith::QPoly::from_i64s(&[1, -1]))
                    .pow(-(k as i32))
                    .expect("1 - q is nonzero");
                let terms = (0..=k)
                    .map(|l| {
                        let mut c = scale
                            .scale(&binom_rat(k, l))
                            .mul_q_pow(l * shape.shift as i64);
                        if l % 2 == 1 {
                            c = -c;
                        }
                        ExpTerm {
                            coeff: c,
                            exps: shape.exps.iter().map(|&e| e + l as u32).collect(),
                        }
                    })
                    .collect();
                ExpPoly {
                    arity: shape.exps.len(),
                    terms,
                }
            }
        }
    }

    /// The exact integral, through the family closed forms where they exist
    /// and through [`ExpPoly::integral`] otherwise.
    pub fn closed_form(&self, measure: Measure) -> QRat {
        match (*self, measure) {
            (IntegrandSpec::PowQ(m), Measure::Bosonic) => carlitz_beta(m),
            (IntegrandSpec::QExp(m), _) => measure.moment(m),
            (IntegrandSpec::MultiExp { k, i }, _) => {
                (1..=k).map(|j| measure.moment(i + k - j)).product()
            }
            (IntegrandSpec::MultiEulerPow { n, k, x }, Measure::Fermionic) => euler_order(k, n, x),
            _ => self.exp_poly().integral(measure),
        }
    }
}

impl fmt::Display for IntegrandSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IntegrandSpec::PowQ(m) => write!(f, "powq:{m}"),
            IntegrandSpec::GaussBinom(n) => write!(f, "gaussbinom:{n}"),
            IntegrandSpec::QExp(m) => write!(f, "qexp:{m}"),
            IntegrandSpec::MultiExp { k, i } => write!(f, "multiexp:{k},{i}"),
            IntegrandSpec::MultiEulerPow { n, k, x } => write!(f, "eulerpow:{n},{k},{x}"),
        }
    }
}

impl FromStr for IntegrandSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse integrand `{s}`"));
        let (tag, args) = s.split_once(':').ok_or_else(bad)?;
        let args: Vec<u32> = args
            .split(',')
            .map(|a| a.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let spec = match (tag, args.as_slice()) {
            ("powq", [m]) => IntegrandSpec::PowQ(*m),
            ("gaussbinom", [n]) => IntegrandSpec::GaussBinom(*n),
            ("qexp", [m]) => IntegrandSpec::QExp(*m),
            ("multiexp", [k, i]) if *k >= 1 => IntegrandSpec::MultiExp { k: *k, i: *i },
            ("eulerpow", [n, k, x]) if *n >= 1 => IntegrandSpec::MultiEulerPow {
                n: *n,
                k: *k,
                x: *x,
            },
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

/// One term `coeff · q^{Σ_l exps[l] x_l}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpTerm {
    pub coeff: QRat,
    pub exps: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpPoly {
    pub arity: usize,
    pub terms: Vec<ExpTerm>,
}

impl ExpPoly {
    /// Exact integral: each exponential integrates to a product of moments.
    pub fn integral(&self, measure: Measure) -> QRat {
        self.terms
            .iter()
            .map(|t| {
                let m: QRat = t.exps.iter().map(|&e| measure.moment(e)).product();
                &t.coeff * &m
            })
            .sum()
    }
}

/// `binom(x, n)_q = Π_{i<n} (1 - q^{-i} q^x) / Π_{i<n} (1 - q^{i+1})`.
fn gauss_binom_exp_poly(n: u32) -> ExpPoly {
    // Π_{i<n} (1 + z q^{-i}) = Σ_j binom(n,j)_q q^{C(j,2) - j(n-1)} z^j, z = -q^x
    let denom = QRat::from_poly(q_factorial(n))
        * QRat::from_poly(crate::arith::QPoly::from_i64s(&[1, -1]))
            .pow(n as i32)
            .expect("nonzero");
    let inv = denom.recip().expect("nonzero");
    let terms = (0..=n as i64)
        .map(|j| {
            let mut c = (&QRat::from_poly(gauss_binom(n as i64, j)) * &inv)
                .mul_q_pow(choose2(j) - j * (n as i64 - 1));
            if j % 2 == 1 {
                c = -c;
            }
            ExpTerm {
                coeff: c,
                exps: vec![j as u32],
            }
        })
        .filter(|t| !t.coeff.is_zero())
        .collect();
    ExpPoly { arity: 1, terms }
}

/// Evaluate an [`ExpPoly`] at a point of `Z^d` with `q` a rational, as a test
/// aid for the expansions.
pub fn eval_exp_poly(
    e: &ExpPoly,
    q: &crate::arith::BigRat,
    xs: &[u32],
) -> Result<crate::arith::BigRat> {
    let mut acc = crate::arith::BigRat::zero();
    for t in &e.terms {
        let c = t.coeff.eval(q)?;
        let pow: u32 = t.exps.iter().zip(xs).map(|(a, b)| a * b).sum();
        acc += c * num_traits::pow(q.clone(), pow as usize);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, BigRat};
    use crate::qcore::q_int;

    #[test]
    fn parse_round_trip() {
        for s in [
            "powq:2",
            "gaussbinom:3",
            "qexp:0",
            "multiexp:2,1",
            "eulerpow:1,1,0",
        ] {
            let spec: IntegrandSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("powq".parse::<IntegrandSpec>().is_err());
        assert!("multiexp:0,1".parse::<IntegrandSpec>().is_err());
        assert!("powq:1,2".parse::<IntegrandSpec>().is_err());
    }

    #[test]
    fn expansions_match_pointwise() {
        let q = rat(4);
        for x in 0..6u32 {
            let xr = x as i64;
            let pow = eval_exp_poly(&IntegrandSpec::PowQ(3).exp_poly(), &q, &[x]).unwrap();
            assert_eq!(pow, q_int(xr).pow(3).unwrap().eval(&q).unwrap());
            let gb = eval_exp_poly(&IntegrandSpec::GaussBinom(2).exp_poly(), &q, &[x]).unwrap();
            assert_eq!(gb, QRat::from_poly(gauss_binom(xr, 2)).eval(&q).unwrap());
        }
        let e = IntegrandSpec::MultiEulerPow { n: 2, k: 2, x: 1 }.exp_poly();
        let v = eval_exp_poly(&e, &q, &[2, 3]).unwrap();
        let expect =
            q_int(6).pow(2).unwrap().eval(&q).unwrap() * BigRat::from_integer(4.into()).pow(2);
        assert_eq!(v, expect);
    }

    #[test]
    fn expansion_integrals_match_closed_forms() {
        // Carlitz's explicit formula against the recursion
        for m in 0..=6 {
            assert_eq!(
                IntegrandSpec::PowQ(m).exp_poly().integral(Measure::Bosonic),
                carlitz_beta(m)
            );
        }
        for (n, k, x) in [(1, 1, 0), (2, 2, 1), (3, 1, 0)] {
            let spec = IntegrandSpec::MultiEulerPow { n, k, x };
            assert_eq!(
                spec.exp_poly().integral(Measure::Fermionic),
                euler_order(k, n, x)
            );
        }
        let spec = IntegrandSpec::MultiExp { k: 3, i: 1 };
        assert_eq!(
            spec.exp_poly().integral(Measure::Bosonic),
            spec.closed_form(Measure::Bosonic)
        );
    }
}
