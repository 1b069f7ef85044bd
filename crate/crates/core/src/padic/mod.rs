//! p-adic numbers with tracked precision and Volkenborn integration against
//! `μ_q` and `μ_{-q}`.
//!
//! Riemann sums are accumulated exactly in `Z / p^W` and divided once by the
//! measure normalizer, so summation order never affects the result.

mod integrand;
mod num;
mod residue;
mod volkenborn;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::One;

use crate::arith::{BigRat, QRat};
use crate::error::{Error, Result};

pub use integrand::{eval_exp_poly, ExpPoly, ExpTerm, IntegrandSpec, Measure, MonomialShape};
pub use num::{padic_arith, rational_valuation, unit_digits, validate_prime, PadicNum, PadicOp};
pub use residue::{BigMod, ResidueRing, SmallMod};
pub use volkenborn::{
    convergence_probe, integrate, riemann_error_bound, volkenborn, volkenborn_multi, MultiMethod,
    ProbeRow,
};

/// Parameter `q` of the measure: a rational with `q ≡ 1 (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicQ {
    p: u64,
    q: BigRat,
}

impl PadicQ {
    pub fn new(p: u64, q: BigRat) -> Result<Self> {
        validate_prime(p)?;
        let d = &q - BigRat::one();
        if let Some(v) = rational_valuation(&d, p) {
            if v < 1 {
                return Err(Error::InvalidPadic(format!(
                    "q = {q} is not congruent to 1 mod {p}"
                )));
            }
        }
        Ok(PadicQ { p, q })
    }

    /// `q = 1 + t·p`.
    pub fn from_offset(p: u64, t: i64) -> Result<Self> {
        let q = BigRat::from_integer(BigInt::from(1) + BigInt::from(t) * BigInt::from(p));
        Self::new(p, q)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> &BigRat {
        &self.q
    }

    pub fn is_one(&self) -> bool {
        self.q.is_one()
    }

    /// `v_p(q - 1)`; `None` when `q = 1`.
    pub fn w(&self) -> Option<i64> {
        rational_valuation(&(&self.q - BigRat::one()), self.p)
    }

    /// `q` as a p-adic number with `precision` digits.
    pub fn as_padic(&self, precision: u32) -> PadicNum {
        PadicNum::from_rational(&self.q, self.p, precision).expect("validated")
    }

    /// Integer representative of `q` modulo `m`, a power of `p`.
    pub fn residue_mod(&self, m: &BigUint) -> BigUint {
        let mi = BigInt::from_biguint(Sign::Plus, m.clone());
        let num = self.q.numer().mod_floor(&mi);
        let den = self.q.denom().mod_floor(&mi);
        let inv = den.extended_gcd(&mi).x.mod_floor(&mi);
        (num * inv)
            .mod_floor(&mi)
            .to_biguint()
            .expect("nonnegative")
    }

    /// Evaluate an exact rational function at this `q`, falling back to the
    /// `q -> 1` limit when `q = 1`.
    pub fn eval_qrat(&self, f: &QRat, precision: u32) -> Result<PadicNum> {
        let value = if self.is_one() {
            f.limit_q1()?
        } else {
            f.eval(&self.q)?
        };
        PadicNum::from_rational(&value, self.p, precision)
    }
}

/// Working precision and term budgets for numeric integration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegrationConfig {
    /// Absolute digits requested for the integral.
    pub precision: u32,
    /// Extra digits carried on top of `precision`.
    pub guard: u32,
    /// Maximum `p^N` for univariate sums.
    pub univariate_budget: u128,
    /// Maximum `p^{kN}` for k-fold sums.
    pub multivariate_budget: u128,
}

impl Default for IntegrationConfig {
    fn default() -> Self {
        IntegrationConfig {
            precision: 12,
            guard: 4,
            univariate_budget: 5u128.pow(7),
            multivariate_budget: 3u128.pow(10),
        }
    }
}

impl IntegrationConfig {
    pub fn digits(&self) -> u32 {
        self.precision + self.guard
    }
}
