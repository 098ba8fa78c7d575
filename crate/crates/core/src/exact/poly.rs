//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{modgcd, Rational};

/// Polynomial in one indeterminate, coefficients indexed by degree.
/// The leading coefficient is nonzero unless the polynomial is zero
/// (empty coefficient vector).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Poly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    /// Builds an even polynomial from the coefficients of `w^0, w^2, w^4, ...`.
    pub fn from_even_ints(coeffs: &[i64]) -> Self {
        let mut full = Vec::with_capacity(coeffs.len() * 2);
        for &c in coeffs {
            full.push(Rational::from_int(c));
            full.push(Rational::zero());
        }
        Poly::from_coeffs(full)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True when only even powers carry nonzero coefficients.
    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| k % 2 == 0 || c.is_zero())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::from_int(i as i64 + 1))
                .collect(),
        )
    }

    pub fn scale(&self, r: &Rational) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Shifts by the variable: `self * w^k`.
    pub fn mul_var_pow(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Clears denominators: returns the primitive integer skeleton `P`
    /// and the rational content `c` with `self = c * P`. Zero maps to
    /// `(0, [])`; the skeleton has a positive leading coefficient.
    pub fn content_and_primitive(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denominator());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numerator() * (&den_lcm / c.denominator()))
            .collect();
        let content = modgcd::content(&ints);
        let prim: Vec<BigInt> = ints.iter().map(|x| x / &content).collect();
        (Rational::new(content, den_lcm), prim)
    }

    pub fn from_int_coeffs(coeffs: &[BigInt]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|c| Rational::from_bigint(c.clone())).collect())
    }

    /// Quotient and remainder with `deg r < deg d`.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead_inv = d.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for qi in (0..quot.len()).rev() {
            let top = rem[qi + dd].clone();
            if top.is_zero() {
                continue;
            }
            let q = top * &lead_inv;
            for (i, dc) in d.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[qi + i] = &rem[qi + i] - &t;
            }
            quot[qi] = q;
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact quotient, `None` when the division leaves a remainder.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    ///
    /// Both arguments are routed through primitive integer polynomials
    /// and a homomorphic-image gcd, which keeps the degree-hundreds
    /// reductions in this crate away from rational remainder blowup.
    pub fn gcd(&self, other: &Poly) -> Poly {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Poly::zero(),
            (true, false) => return other.monic(),
            (false, true) => return self.monic(),
            _ => {}
        }
        let (_, a) = self.content_and_primitive();
        let (_, b) = other.content_and_primitive();
        let g = modgcd::gcd_primitive_int(&a, &b);
        Poly::from_int_coeffs(&g).monic()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::from_coeffs(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(Neg::neg).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        // Convolve integer skeletons; one rational division at the end.
        let (ca, pa) = self.content_and_primitive();
        let (cb, pb) = rhs.content_and_primitive();
        let mut acc = vec![BigInt::zero(); pa.len() + pb.len() - 1];
        for (i, ai) in pa.iter().enumerate() {
            for (j, bj) in pb.iter().enumerate() {
                acc[i + j] += ai * bj;
            }
        }
        let scale = ca * cb;
        Poly::from_coeffs(
            acc.into_iter()
                .map(|c| Rational::from_bigint(c) * &scale)
                .collect(),
        )
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "w")?,
                1 => write!(f, "{c}*w")?,
                _ if c.is_one() => write!(f, "w^{k}")?,
                _ => write!(f, "{c}*w^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Poly {
        Poly::var()
    }

    #[test]
    fn gcd_shared_root() {
        // gcd(w^2 - 1, w - 1) = w - 1
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn gcd_with_zero_is_monic_argument() {
        let p = Poly::from_ints(&[2, 0, 4]);
        assert_eq!(p.gcd(&Poly::zero()), p.monic());
        assert_eq!(Poly::zero().gcd(&p), p.monic());
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Poly::zero());
    }

    #[test]
    fn divrem_roundtrip() {
        let a = Poly::from_ints(&[1, -2, 0, 5, 3]);
        let d = Poly::from_ints(&[2, 1, 1]);
        let (q, r) = a.divrem(&d);
        assert_eq!(&q * &d + &r, a);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn derivative_and_eval() {
        // d/dw (w^3 - 2w) = 3w^2 - 2
        let p = Poly::from_ints(&[0, -2, 0, 1]);
        assert_eq!(p.derivative(), Poly::from_ints(&[-2, 0, 3]));
        assert_eq!(p.eval(&Rational::from_int(2)), Rational::from_int(4));
    }

    #[test]
    fn even_constructor() {
        // [3, 0, 1] by even degree is w^4 + 3
        let p = Poly::from_even_ints(&[3, 0, 1]);
        assert_eq!(p, w().pow(4) + Poly::from_ints(&[3]));
        assert!(p.is_even());
    }

    #[test]
    fn content_primitive() {
        let p = Poly::from_coeffs(vec![Rational::of(2, 3), Rational::of(4, 9)]);
        let (c, prim) = p.content_and_primitive();
        assert_eq!(c, Rational::of(2, 9));
        assert_eq!(prim, vec![BigInt::from(3), BigInt::from(2)]);
        assert_eq!(Poly::from_int_coeffs(&prim).scale(&c), p);
    }
}
