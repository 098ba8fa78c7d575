//! Exact verification engine for an algebraic Painleve VI solution
//! hierarchy built from equivariant instanton monads.
//!
//! The layers, bottom up:
//!
//! - [`exact`]: big rationals, quadratic-root scalars, dense univariate
//!   polynomials, reduced rational functions;
//! - [`forms`]: binary forms, transvectants and the sl2 structure;
//! - [`monad`]: equivariant monad coefficient tables and their
//!   injectivity/isotropy verification;
//! - [`connection`]: the logarithmic-connection pipeline on the trivial
//!   bundle, ending in the ground-state solutions;
//! - [`pvi`]: Painleve VI solution objects, the exact residual
//!   certificate and the solution catalog;
//! - [`okamoto`]: the transformation group acting on solutions and the
//!   creation-operator hierarchy checks;
//! - [`suite`]: seeded randomized property suites shared by the test
//!   harness and the command-line `selftest`.
//!
//! All values are immutable after construction and all operations are
//! pure functions, so verifications for independent cases can run on
//! separate threads freely.

pub mod connection;
pub mod exact;
pub mod field;
pub mod forms;
pub mod monad;
pub mod okamoto;
pub mod pvi;
pub mod report;
pub mod suite;

pub use field::Field;

use serde::{Deserialize, Serialize};

/// Branch label for the paired solutions at each level.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plus" | "+" => Ok(Sign::Plus),
            "minus" | "-" => Ok(Sign::Minus),
            other => Err(format!("unknown sign {other:?} (expected plus|minus)")),
        }
    }
}
