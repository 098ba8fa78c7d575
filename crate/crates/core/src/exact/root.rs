//! Scalars of the form `r * sqrt(n)` with `r` rational and `n` a
//! squarefree nonnegative integer.
//!
//! This is all the irrationality the monad coefficient tables need:
//! products renormalize the radicand, sums are only defined inside a
//! single radical line `Q * sqrt(n)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ExactError, Rational};

/// `coeff * sqrt(radicand)`, radicand squarefree, zero written as `0 * sqrt(1)`.
///
/// Square roots always denote the nonnegative real branch.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootScalar {
    coeff: Rational,
    radicand: u64,
}

/// Splits `n` into `s^2 * d` with `d` squarefree, returning `(s, d)`.
///
/// Plain trial division; every radicand in this crate is a small integer
/// built from bounded index arithmetic.
fn extract_square(n: u64) -> (u64, u64) {
    let mut square_part = 1u64;
    let mut rest = n;
    let mut f = 2u64;
    while f * f <= rest {
        while rest % (f * f) == 0 {
            rest /= f * f;
            square_part *= f;
        }
        f += 1;
    }
    (square_part, rest)
}

impl RootScalar {
    /// Canonical `coeff * sqrt(radicand)`; extracts square factors, maps
    /// radicand 0 and coefficient 0 to the canonical zero.
    pub fn new(coeff: Rational, radicand: u64) -> Self {
        if coeff.is_zero() || radicand == 0 {
            return Self::zero();
        }
        let (s, d) = extract_square(radicand);
        RootScalar {
            coeff: coeff * Rational::from_int(s as i64),
            radicand: d,
        }
    }

    /// `sqrt(n)` for a nonnegative integer `n`.
    pub fn sqrt(n: u64) -> Self {
        Self::new(Rational::one(), n)
    }

    pub fn rational(r: Rational) -> Self {
        Self::new(r, 1)
    }

    pub fn zero() -> Self {
        RootScalar {
            coeff: Rational::zero(),
            radicand: 1,
        }
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand == 1
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.coeff)
    }

    /// The square is always rational: `(r sqrt(n))^2 = r^2 n`.
    pub fn square(&self) -> Rational {
        self.coeff.square() * Rational::from_int(self.radicand as i64)
    }

    /// Sum within one radical line; distinct radicands are not closed
    /// under addition here and report an error instead.
    pub fn try_add(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.radicand != rhs.radicand {
            return Err(ExactError::MixedRadicands(self.radicand, rhs.radicand));
        }
        Ok(Self::new(&self.coeff + &rhs.coeff, self.radicand))
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero root scalar");
        // 1/(r sqrt(n)) = sqrt(n)/(r n)
        let denom = &self.coeff * &Rational::from_int(self.radicand as i64);
        Self::new(denom.recip(), self.radicand)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.coeff * r, self.radicand)
    }
}

impl Mul for RootScalar {
    type Output = RootScalar;
    fn mul(self, rhs: RootScalar) -> RootScalar {
        &self * &rhs
    }
}

impl Mul<&RootScalar> for &RootScalar {
    type Output = RootScalar;
    fn mul(self, rhs: &RootScalar) -> RootScalar {
        if self.is_zero() || rhs.is_zero() {
            return RootScalar::zero();
        }
        // Both radicands are squarefree, so n1*n2 = g^2 * (n1/g)(n2/g)
        // with g = gcd(n1, n2) and the cofactor product squarefree.
        let g = num_integer::gcd(self.radicand, rhs.radicand);
        let coeff = &self.coeff * &rhs.coeff * Rational::from_int(g as i64);
        RootScalar {
            coeff,
            radicand: (self.radicand / g) * (rhs.radicand / g),
        }
    }
}

impl Neg for RootScalar {
    type Output = RootScalar;
    fn neg(self) -> RootScalar {
        RootScalar {
            coeff: -self.coeff,
            radicand: self.radicand,
        }
    }
}

impl Add for RootScalar {
    type Output = RootScalar;
    /// Defined only within one radical line; use `try_add` to observe the
    /// mixed-radicand error instead of a panic.
    fn add(self, rhs: RootScalar) -> RootScalar {
        self.try_add(&rhs).expect("mixed-radicand addition")
    }
}

impl Sub for RootScalar {
    type Output = RootScalar;
    /// Defined only within one radical line, like `try_add`.
    fn sub(self, rhs: RootScalar) -> RootScalar {
        self.try_add(&(-rhs)).expect("mixed-radicand subtraction")
    }
}

impl fmt::Display for RootScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 1 {
            write!(f, "{}", self.coeff)
        } else if self.coeff.is_one() {
            write!(f, "sqrt({})", self.radicand)
        } else {
            write!(f, "{}*sqrt({})", self.coeff, self.radicand)
        }
    }
}

impl fmt::Debug for RootScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
