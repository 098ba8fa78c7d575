//! Binary forms over an exact coefficient field, the transvectant
//! operation, and the sl2 structure built from it.
//!
//! A form supported in a single total degree `d` is an element of the
//! irreducible representation of dimension `d + 1`. The `p`-th
//! transvectant
//!
//! ```text
//! <u, v>_p = (1/p!) sum_k (-1)^k C(p,k)
//!            d^p u / dx^(p-k) dy^k  *  d^p v / dx^k dy^(p-k)
//! ```
//!
//! maps degrees `(i, j)` to `i + j - 2p` and realizes every
//! Clebsch-Gordan projection. The blank pairing `<u, v>` is the full
//! transvectant on equal-degree components, extended bilinearly over
//! direct sums.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::exact::Rational;
use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormsError {
    #[error("degenerate frame: the two linear forms are dependent")]
    DegenerateFrame,
}

/// Sparse binary form: exponent pairs `(i, j)` of `x^i y^j` mapped to
/// nonzero field coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct BiForm<F: Field> {
    terms: BTreeMap<(u32, u32), F>,
}

fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Exact binomial coefficient, no table cap.
fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    &(&factorial(n) / &factorial(k)) / &factorial(n - k)
}

fn falling(n: u32, steps: u32) -> BigInt {
    let mut acc = BigInt::one();
    for s in 0..steps {
        acc *= BigInt::from(n - s);
    }
    acc
}

impl<F: Field> BiForm<F> {
    pub fn zero() -> Self {
        BiForm {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(xdeg: u32, ydeg: u32, coeff: F) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((xdeg, ydeg), coeff);
        }
        BiForm { terms }
    }

    pub fn var_x() -> Self {
        Self::monomial(1, 0, F::one())
    }

    pub fn var_y() -> Self {
        Self::monomial(0, 1, F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), F)>) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in terms {
            out.add_term(i, j, c);
        }
        out
    }

    fn add_term(&mut self, i: u32, j: u32, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> F {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(F::zero)
    }

    /// The common total degree, when the support is homogeneous.
    /// Zero forms report `None` as well.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|&(i, j)| i + j);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        BiForm {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j == d)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    fn component_degrees(&self) -> Vec<u32> {
        let mut degs: Vec<u32> = self.terms.keys().map(|&(i, j)| i + j).collect();
        degs.sort_unstable();
        degs.dedup();
        degs
    }

    /// Value of a degree-zero form.
    pub fn constant_value(&self) -> F {
        debug_assert!(self.terms.keys().all(|&k| k == (0, 0)));
        self.coeff(0, 0)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiForm {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&F::from_rational(r))
    }

    /// Partial derivative of order `(dx, dy)`.
    pub fn partial(&self, dx: u32, dy: u32) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if i < dx || j < dy {
                continue;
            }
            let factor = &falling(i, dx) * &falling(j, dy);
            let r = Rational::from_bigint(factor);
            out.add_term(i - dx, j - dy, c.clone() * F::from_rational(&r));
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(F::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Converts coefficients into another field pointwise.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> BiForm<G> {
        BiForm {
            terms: self.terms.iter().map(|(k, v)| (*k, f(v))).collect(),
        }
    }
}

impl<F: Field> Add for &BiForm<F> {
    type Output = BiForm<F>;
    fn add(self, rhs: &BiForm<F>) -> BiForm<F> {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &BiForm<F> {
    type Output = BiForm<F>;
    fn sub(self, rhs: &BiForm<F>) -> BiForm<F> {
        self + &-rhs
    }
}

impl<F: Field> Neg for &BiForm<F> {
    type Output = BiForm<F>;
    fn neg(self) -> BiForm<F> {
        BiForm {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, -v.clone()))
                .collect(),
        }
    }
}

impl<F: Field> Mul for &BiForm<F> {
    type Output = BiForm<F>;
    fn mul(self, rhs: &BiForm<F>) -> BiForm<F> {
        let mut out = BiForm::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a.clone() * b.clone());
            }
        }
        out
    }
}

macro_rules! forward_owned_form {
    ($trait:ident, $method:ident) => {
        impl<F: Field> $trait for BiForm<F> {
            type Output = BiForm<F>;
            fn $method(self, rhs: BiForm<F>) -> BiForm<F> {
                (&self).$method(&rhs)
            }
        }
        impl<F: Field> $trait<&BiForm<F>> for BiForm<F> {
            type Output = BiForm<F>;
            fn $method(self, rhs: &BiForm<F>) -> BiForm<F> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_form!(Add, add);
forward_owned_form!(Sub, sub);
forward_owned_form!(Mul, mul);

impl<F: Field> Neg for BiForm<F> {
    type Output = BiForm<F>;
    fn neg(self) -> BiForm<F> {
        -&self
    }
}

impl<F: Field> fmt::Debug for BiForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})")?;
            if i > 0 {
                write!(f, "*x^{i}")?;
            }
            if j > 0 {
                write!(f, "*y^{j}")?;
            }
        }
        Ok(())
    }
}

/// The `p`-th transvectant `<u, v>_p`.
///
/// Restricted to degrees `(i, j)` it lands in degree `i + j - 2p` and
/// vanishes when `p > min(i, j)`.
pub fn transvectant<F: Field>(u: &BiForm<F>, v: &BiForm<F>, p: u32) -> BiForm<F> {
    let p_fact_inv = Rational::from_bigint(factorial(p)).recip();
    let mut acc = BiForm::zero();
    for k in 0..=p {
        let du = u.partial(p - k, k);
        if du.is_zero() {
            continue;
        }
        let dv = v.partial(k, p - k);
        if dv.is_zero() {
            continue;
        }
        let mut c = Rational::from_bigint(binomial(p, k)) * &p_fact_inv;
        if k % 2 == 1 {
            c = -c;
        }
        acc = &acc + &(&du * &dv).scale_rational(&c);
    }
    acc
}

/// Full pairing `<u, v>`: the top transvectant on each equal-degree pair
/// of homogeneous components, extended bilinearly.
pub fn pairing<F: Field>(u: &BiForm<F>, v: &BiForm<F>) -> F {
    let mut acc = F::zero();
    for d in u.component_degrees() {
        let vd = v.homogeneous_component(d);
        if vd.is_zero() {
            continue;
        }
        let ud = u.homogeneous_component(d);
        acc = acc + transvectant(&ud, &vd, d).constant_value();
    }
    acc
}

/// Lie-algebra action of a degree-2 form: `[g, v] = <g, v>_1`.
pub fn bracket<F: Field>(g: &BiForm<F>, v: &BiForm<F>) -> BiForm<F> {
    debug_assert!(
        g.is_zero() || g.homogeneous_degree() == Some(2),
        "bracket source must lie in degree 2"
    );
    transvectant(g, v, 1)
}

/// Degrees in the Clebsch-Gordan decomposition of `(i, j)`:
/// `i + j, i + j - 2, ..., |i - j|`.
pub fn clebsch_gordan_components(i: u32, j: u32) -> Vec<u32> {
    let low = i.abs_diff(j);
    (low..=i + j).rev().step_by(2).collect()
}

/// A frame: two independent degree-1 forms and their pairing.
#[derive(Clone, Debug)]
pub struct Sl2Frame<F: Field> {
    a: BiForm<F>,
    b: BiForm<F>,
    pairing: F,
}

impl<F: Field> Sl2Frame<F> {
    pub fn new(a: BiForm<F>, b: BiForm<F>) -> Result<Self, FormsError> {
        let p = pairing(&a, &b);
        if p.is_zero() {
            return Err(FormsError::DegenerateFrame);
        }
        Ok(Sl2Frame { a, b, pairing: p })
    }

    pub fn a(&self) -> &BiForm<F> {
        &self.a
    }

    pub fn b(&self) -> &BiForm<F> {
        &self.b
    }

    pub fn frame_pairing(&self) -> &F {
        &self.pairing
    }

    /// `g0 = -a b / <a, b>`
    pub fn g0(&self) -> BiForm<F> {
        (&self.a * &self.b).scale(&self.pairing.inv()).neg()
    }

    /// `g+ = a^2 / (2 <a, b>)`
    pub fn gplus(&self) -> BiForm<F> {
        let half = F::from_rational(&Rational::of(1, 2));
        (&self.a * &self.a).scale(&(half * self.pairing.inv()))
    }

    /// `g- = -b^2 / (2 <a, b>)`
    pub fn gminus(&self) -> BiForm<F> {
        let half = F::from_rational(&Rational::of(1, 2));
        (&self.b * &self.b).scale(&(half * self.pairing.inv())).neg()
    }

    /// Coordinates of a degree-2 form in the basis `(g0, g+, g-)`.
    ///
    /// With the normalized basis, `<g0,g0> = -1`, `<g+,g-> = -1/2` and the
    /// other pairings vanish for any frame, so the dual extraction is
    /// `c0 = -<k, g0>`, `c+ = -2<k, g->`, `c- = -2<k, g+>`.
    pub fn coords(&self, k: &BiForm<F>) -> Sl2Elem<F> {
        let minus_two = Rational::from_int(-2);
        Sl2Elem {
            c0: -pairing(k, &self.g0()),
            cplus: pairing(k, &self.gminus()).scale(&minus_two),
            cminus: pairing(k, &self.gplus()).scale(&minus_two),
        }
    }
}

/// Coordinates of a Lie-algebra element in the frame basis
/// `(g0, g+, g-)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sl2Elem<F: Field> {
    pub c0: F,
    pub cplus: F,
    pub cminus: F,
}

impl<F: Field> Sl2Elem<F> {
    pub fn to_form(&self, frame: &Sl2Frame<F>) -> BiForm<F> {
        let mut acc = frame.g0().scale(&self.c0);
        acc = &acc + &frame.gplus().scale(&self.cplus);
        &acc + &frame.gminus().scale(&self.cminus)
    }
}

/// The normalized basis `(g0, g+, g-)` of a frame, as degree-2 forms.
pub fn sl2_basis<F: Field>(
    a: &BiForm<F>,
    b: &BiForm<F>,
) -> Result<(BiForm<F>, BiForm<F>, BiForm<F>), FormsError> {
    let frame = Sl2Frame::new(a.clone(), b.clone())?;
    Ok((frame.g0(), frame.gplus(), frame.gminus()))
}

/// Polynomial in an auxiliary line parameter with binary-form
/// coefficients; transvectants extend coefficient-wise by bilinearity.
#[derive(Clone, PartialEq, Debug)]
pub struct FormPoly<F: Field> {
    coeffs: Vec<BiForm<F>>,
}

impl<F: Field> FormPoly<F> {
    pub fn from_coeffs(mut coeffs: Vec<BiForm<F>>) -> Self {
        while coeffs.last().is_some_and(BiForm::is_zero) {
            coeffs.pop();
        }
        FormPoly { coeffs }
    }

    /// The pencil `u + z v`.
    pub fn pencil(u: BiForm<F>, v: BiForm<F>) -> Self {
        Self::from_coeffs(vec![u, v])
    }

    pub fn constant(u: BiForm<F>) -> Self {
        Self::from_coeffs(vec![u])
    }

    pub fn zero() -> Self {
        FormPoly { coeffs: Vec::new() }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BiForm<F> {
        self.coeffs.get(k).cloned().unwrap_or_else(BiForm::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }

    pub fn scale_form(&self, c: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|u| u.scale(c)).collect())
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|u| u.scale_rational(r)).collect())
    }

    /// Coefficient-wise transvectant convolution.
    pub fn transvect(&self, rhs: &Self, p: u32) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut out = vec![BiForm::zero(); n];
        for (i, u) in self.coeffs.iter().enumerate() {
            for (j, v) in rhs.coeffs.iter().enumerate() {
                let t = transvectant(u, v, p);
                if !t.is_zero() {
                    out[i + j] = &out[i + j] + &t;
                }
            }
        }
        Self::from_coeffs(out)
    }

    /// Coefficient-wise full pairing against the other polynomial.
    pub fn pair(&self, rhs: &Self) -> Vec<F> {
        if self.is_zero() || rhs.is_zero() {
            return Vec::new();
        }
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut out = vec![F::zero(); n];
        for (i, u) in self.coeffs.iter().enumerate() {
            for (j, v) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + pairing(u, v);
            }
        }
        while out.last().is_some_and(F::is_zero) {
            out.pop();
        }
        out
    }

    /// Scalar coefficients of a degree-0-valued polynomial.
    pub fn scalar_coeffs(&self) -> Vec<F> {
        self.coeffs.iter().map(BiForm::constant_value).collect()
    }
}
