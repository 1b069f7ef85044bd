//! Exact q-calculus workbench.
//!
//! Gaussian binomials, q-Stirling numbers, Carlitz and higher-order
//! q-Bernoulli numbers and higher-order q-Euler numbers as exact rational
//! functions of `q`, together with a p-adic evaluator for q-Volkenborn
//! integrals and an audit engine that checks a fixed catalog of identities.

pub mod arith;
pub mod error;
pub mod qcore;

pub use arith::{BigRat, QPoly, QRat, QSeries};
pub use error::{Error, Result};
pub mod audit;
pub mod bernoulli;
pub mod classical;
pub mod padic;
pub mod stirling;
pub mod table;
