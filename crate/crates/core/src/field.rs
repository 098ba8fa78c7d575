//! Coefficient-field abstraction shared by the binary-form layer.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exact::{RatFun, Rational, RootScalar};

/// Exact coefficient field for binary forms: the rationals, one radical
/// line `Q*sqrt(n)`, or rational functions of the curve parameter.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Self;

    fn div(&self, rhs: &Self) -> Self {
        self.clone() * rhs.inv()
    }

    fn scale(&self, r: &Rational) -> Self {
        self.clone() * Self::from_rational(r)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Field for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn from_rational(r: &Rational) -> Self {
        RatFun::constant(r.clone())
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Sums panic on mixed radicands; the verification paths that run over
/// this field only ever add within a single radical line.
impl Field for RootScalar {
    fn zero() -> Self {
        RootScalar::zero()
    }
    fn one() -> Self {
        RootScalar::one()
    }
    fn from_rational(r: &Rational) -> Self {
        RootScalar::rational(r.clone())
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}
