//! Exact scalar and polynomial arithmetic: big rationals, quadratic-root
//! scalars, dense univariate polynomials and reduced rational functions.
//!
//! Everything in this module is immutable value semantics; no floating
//! point appears anywhere.

mod modgcd;
mod poly;
mod ratfun;
mod rational;
mod root;

pub use poly::Poly;
pub use ratfun::RatFun;
pub use rational::Rational;
pub use root::RootScalar;

use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero rational function")]
    ZeroDenominator,
    #[error("sum of root scalars with distinct radicands {0} and {1}")]
    MixedRadicands(u64, u64),
}
