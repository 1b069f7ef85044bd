//! Exact arithmetic in Q(q): rationals, polynomials, rational functions and
//! truncated power series.

pub mod fmt;
mod poly;
mod qrat;
mod series;

pub use poly::QPoly;
pub use qrat::QRat;
pub use series::QSeries;

/// Arbitrary-precision rational number in lowest terms with positive denominator.
pub type BigRat = num_rational::BigRational;

/// Shorthand for an integer-valued [`BigRat`].
pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}
