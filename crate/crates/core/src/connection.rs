//! The logarithmic-connection pipeline on the trivial bundle: quartic
//! invariants of cubics, the unique inverse of the infinitesimal
//! action, the explicit curve family, residue analysis at the pencil
//! origin, and the eigenvector solve that produces the ground-state
//! solutions.

use thiserror::Error;

use crate::exact::{RatFun, Rational};
use crate::field::Field;
use crate::forms::{bracket, pairing, transvectant, BiForm, FormPoly, FormsError, Sl2Elem, Sl2Frame};
use crate::Sign;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectionError {
    #[error(transparent)]
    Frame(#[from] FormsError),
    #[error("nongeneric configuration: <v, a^3> = 0")]
    NongenericConfiguration,
    #[error("degenerate eigencondition: no linear term to solve")]
    DegenerateEigencondition,
}

/// The quartic invariant `p(u) = <u^2, u^2>` of a cubic, the full
/// pairing of the square with itself in degree six.
pub fn quartic_invariant<F: Field>(u: &BiForm<F>) -> F {
    let u2 = u * u;
    pairing(&u2, &u2)
}

/// `q(u) = (<a b><b c><c a>)^2` for a factored cubic `u = a b c`.
pub fn q_from_factors<F: Field>(a: &BiForm<F>, b: &BiForm<F>, c: &BiForm<F>) -> F {
    let p = pairing(a, b) * pairing(b, c) * pairing(c, a);
    p.clone() * p
}

/// Determinant of the transvectant-pairing matrix between
/// `([g0,u], [g+,u], [g-,u], u)` and the cubic monomial basis
/// `(x^3, x^2 y, x y^2, y^3)`, for the frame `(x, y)`.
pub fn r_determinant<F: Field>(u: &BiForm<F>) -> F {
    let frame = Sl2Frame::new(BiForm::var_x(), BiForm::var_y()).expect("standard frame");
    let rows = [
        bracket(&frame.g0(), u),
        bracket(&frame.gplus(), u),
        bracket(&frame.gminus(), u),
        u.clone(),
    ];
    let basis = [
        BiForm::var_x().pow(3),
        &BiForm::var_x().pow(2) * &BiForm::var_y(),
        &BiForm::var_x() * &BiForm::var_y().pow(2),
        BiForm::var_y().pow(3),
    ];
    let mut m = Vec::with_capacity(4);
    for row in &rows {
        m.push(basis.iter().map(|e| pairing(row, e)).collect::<Vec<F>>());
    }
    det4(&m)
}

fn det4<F: Field>(m: &[Vec<F>]) -> F {
    let det3 = |r: [usize; 3], c: [usize; 3]| -> F {
        let t = |i: usize, j: usize| m[r[i]][c[j]].clone();
        t(0, 0) * (t(1, 1) * t(2, 2) - t(1, 2) * t(2, 1))
            - t(0, 1) * (t(1, 0) * t(2, 2) - t(1, 2) * t(2, 0))
            + t(0, 2) * (t(1, 0) * t(2, 1) - t(1, 1) * t(2, 0))
    };
    let mut acc = F::zero();
    let cols = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];
    for (j, sub) in cols.iter().enumerate() {
        let term = m[0][j].clone() * det3([1, 2, 3], *sub);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// The unique degree-2 form with `[h(u,v)/p(u), u] + (sigma(u,v)/p(u)) u = v`:
/// `h(u,v) = (1/5) <<u^2,u>_3, v>_2 - (2/35) <<u^2,u>_2, v>_3`.
pub fn h_form<F: Field>(u: &BiForm<F>, v: &BiForm<F>) -> BiForm<F> {
    let u2 = u * u;
    let t3 = transvectant(&u2, u, 3);
    let t2 = transvectant(&u2, u, 2);
    let lhs = transvectant(&t3, v, 2).scale_rational(&Rational::of(1, 5));
    let rhs = transvectant(&t2, v, 3).scale_rational(&Rational::of(2, 35));
    &lhs - &rhs
}

/// The scalar companion `sigma(u,v) = <<u^2,u>_3, v>` (full cubic pairing).
pub fn sigma_form<F: Field>(u: &BiForm<F>, v: &BiForm<F>) -> F {
    let u2 = u * u;
    pairing(&transvectant(&u2, u, 3), v)
}

/// `h(U(z), v)` for a form-valued polynomial first argument, expanded
/// coefficient-wise in the line parameter.
pub fn h_form_pencil<F: Field>(u: &FormPoly<F>, v: &BiForm<F>) -> FormPoly<F> {
    let u2 = u.transvect(u, 0);
    let vc = FormPoly::constant(v.clone());
    let t3 = u2.transvect(u, 3);
    let t2 = u2.transvect(u, 2);
    let lhs = t3.transvect(&vc, 2).scale_rational(&Rational::of(1, 5));
    let rhs = t2.transvect(&vc, 3).scale_rational(&Rational::of(-2, 35));
    lhs.add(&rhs)
}

/// Scalar coefficients of `p(U(z))` in the line parameter.
pub fn quartic_pencil<F: Field>(u: &FormPoly<F>) -> Vec<F> {
    let u2 = u.transvect(u, 0);
    u2.pair(&u2)
}

/// The pencil of cubics whose quartic divisor realizes the moving
/// cross-ratio `t(w)`.
#[derive(Clone, Debug)]
pub struct FormPair {
    pub u: BiForm<RatFun>,
    pub v: BiForm<RatFun>,
}

/// `u~(w) = -((w+1)/(w+3)^3) (x+y)^2 (8x + (w^2-1)y)` and `v~ = x^2 y`.
pub fn curve_family(w: &RatFun) -> FormPair {
    let x: BiForm<RatFun> = BiForm::var_x();
    let y: BiForm<RatFun> = BiForm::var_y();
    let one = RatFun::one;
    let w_plus_1 = w + &one();
    let w_plus_3 = w + &RatFun::constant(Rational::from_int(3));
    let scale = -(&w_plus_1 / &w_plus_3.pow(3));
    let linear = x.scale(&RatFun::constant(Rational::from_int(8)))
        + y.scale(&(w * w - one()));
    let u = ((&x + &y).pow(2) * linear).scale(&scale);
    let v = &x.pow(2) * &y;
    FormPair { u, v }
}

/// Coefficient functions of `h(u + z a^2 b, a^2 b)` in the frame basis:
/// `h0(z) g0 + h+(z) g+ + h-(z) g-`. Stored by ascending power of `z`.
#[derive(Clone, Debug, PartialEq)]
pub struct HCoeffs<F: Field> {
    pub h0: Vec<F>,
    pub hplus: Vec<F>,
    pub hminus: Vec<F>,
}

/// Closed forms for the frame coefficients of `h(u + z a^2 b, a^2 b)`,
/// in terms of the cubic pairings of `u` against the frame monomials:
///
/// ```text
/// <ab>^3 h0(z) = 3<u,a2b>^2<u,ab2> - 2<u,a3><u,ab2>^2 - <u,a3><u,a2b><u,b3>
///              + 2<ab>^3 (4<u,a3><u,ab2> - 3<u,a2b>^2) z - 8<ab>^6 <u,a3> z^2
/// <ab>^3 h+(z) = 4<u,b3> (<u,a2b>^2 - <u,a3><u,ab2> + 2<ab>^3 <u,a3> z)
/// <ab>^3 h-(z) = 2<u,a3> (<u,a3><u,b3> - <u,a2b><u,ab2> + 2<ab>^3 <u,a2b> z)
/// ```
pub fn h_coeffs<F: Field>(
    u: &BiForm<F>,
    a: &BiForm<F>,
    b: &BiForm<F>,
) -> Result<HCoeffs<F>, ConnectionError> {
    let s = pairing(a, b);
    if s.is_zero() {
        return Err(FormsError::DegenerateFrame.into());
    }
    let s3 = s.clone() * s.clone() * s.clone();
    let s6 = s3.clone() * s3.clone();
    let ua3 = pairing(u, &a.pow(3));
    let ua2b = pairing(u, &(&a.pow(2) * b));
    let uab2 = pairing(u, &(a * &b.pow(2)));
    let ub3 = pairing(u, &b.pow(3));
    let r = |n: i64| F::from_rational(&Rational::from_int(n));
    let inv = s3.inv();

    let h0 = vec![
        (r(3) * ua2b.clone() * ua2b.clone() * uab2.clone()
            - r(2) * ua3.clone() * uab2.clone() * uab2.clone()
            - ua3.clone() * ua2b.clone() * ub3.clone())
            * inv.clone(),
        (r(2) * s3.clone()
            * (r(4) * ua3.clone() * uab2.clone() - r(3) * ua2b.clone() * ua2b.clone()))
            * inv.clone(),
        r(-8) * s6 * ua3.clone() * inv.clone(),
    ];
    let hplus = vec![
        r(4) * ub3.clone()
            * (ua2b.clone() * ua2b.clone() - ua3.clone() * uab2.clone())
            * inv.clone(),
        r(8) * ub3.clone() * s3.clone() * ua3.clone() * inv.clone(),
    ];
    let hminus = vec![
        r(2) * ua3.clone()
            * (ua3.clone() * ub3 - ua2b.clone() * uab2)
            * inv.clone(),
        r(4) * ua3 * s3 * ua2b * inv,
    ];
    Ok(HCoeffs {
        h0: trim_scalars(h0),
        hplus: trim_scalars(hplus),
        hminus: trim_scalars(hminus),
    })
}

fn trim_scalars<F: Field>(mut v: Vec<F>) -> Vec<F> {
    while v.last().is_some_and(F::is_zero) {
        v.pop();
    }
    v
}

/// Residue of the inverse-action one-form along the pencil
/// `a^2 b + z v` at `z = 0`, in frame coordinates. For any generic `v`
/// (`<v, a^3> != 0`) this is `-(1/4) g0(a, b)`.
pub fn residue_at_zero<F: Field>(
    a: &BiForm<F>,
    b: &BiForm<F>,
    v: &BiForm<F>,
) -> Result<Sl2Elem<F>, ConnectionError> {
    let frame = Sl2Frame::new(a.clone(), b.clone())?;
    if pairing(v, &a.pow(3)).is_zero() {
        return Err(ConnectionError::NongenericConfiguration);
    }
    let base = &a.pow(2) * b;
    // Numerator constant term and denominator slope of the simple pole.
    let numerator = h_form(&base, v);
    let pencil = FormPoly::pencil(base, v.clone());
    let denom = quartic_pencil(&pencil);
    debug_assert!(denom.first().is_none_or(F::is_zero), "p(a^2 b) = 0");
    let slope = denom.get(1).cloned().unwrap_or_else(F::zero);
    debug_assert!(!slope.is_zero());
    let residue = numerator.scale(&slope.inv());
    Ok(frame.coords(&residue))
}

/// Solves the degree-one eigenvector condition of the ground-state
/// pencil and returns the resulting algebraic function of `w`.
///
/// The eigenvector data is `f0 = <r, [g-, r]>`, `g0 = -<r, [g+, r]>`
/// for `r = x` (plus) or `r = y` (minus); the condition to solve is
/// `h-(z) f0 - h+(z) g0 = 0` with the coefficients of the curve family.
pub fn solve_lambda0(sign: Sign) -> Result<RatFun, ConnectionError> {
    let w = RatFun::var();
    let pair = curve_family(&w);
    let a: BiForm<RatFun> = BiForm::var_x();
    let b: BiForm<RatFun> = BiForm::var_y();
    let frame = Sl2Frame::new(a.clone(), b.clone())?;
    let r = match sign {
        Sign::Plus => &a,
        Sign::Minus => &b,
    };
    let f0 = pairing(r, &bracket(&frame.gminus(), r));
    let g0 = -pairing(r, &bracket(&frame.gplus(), r));
    let h = h_coeffs(&pair.u, &a, &b)?;
    let coeff = |v: &[RatFun], k: usize| v.get(k).cloned().unwrap_or_else(RatFun::zero);
    let c0 = &coeff(&h.hminus, 0) * &f0 - &coeff(&h.hplus, 0) * &g0;
    let c1 = &coeff(&h.hminus, 1) * &f0 - &coeff(&h.hplus, 1) * &g0;
    if c1.is_zero() {
        return Err(ConnectionError::DegenerateEigencondition);
    }
    Ok(-(&c0 / &c1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Poly;
    use crate::suite::gen;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type Q = Rational;

    fn x() -> BiForm<Q> {
        BiForm::var_x()
    }

    fn y() -> BiForm<Q> {
        BiForm::var_y()
    }

    fn factored_cubic() -> BiForm<Q> {
        &(&x() * &y()) * &(&x() + &y())
    }

    #[test]
    fn quartic_invariant_examples() {
        assert!(quartic_invariant(&x().pow(3)).is_zero());
        assert_eq!(quartic_invariant(&factored_cubic()), Rational::from_int(-48));
    }

    #[test]
    fn q_examples() {
        let q = q_from_factors(&x(), &y(), &(&x() + &y()));
        assert_eq!(q, Rational::one());
        assert!(q_from_factors(&x(), &x(), &y()).is_zero());
    }

    #[test]
    fn q_is_proportional_to_p() {
        // q = -p/48 over randomized factored cubics
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let k_q = Rational::of(-1, 48);
        for _ in 0..20 {
            let (a, b, c) = gen::factored_cubic(&mut rng);
            let u = &(&a * &b) * &c;
            assert_eq!(q_from_factors(&a, &b, &c), &k_q * &quartic_invariant(&u));
        }
    }

    #[test]
    fn r_examples() {
        assert_eq!(r_determinant(&factored_cubic()), Rational::from_int(288));
        assert!(r_determinant(&x().pow(3)).is_zero());
    }

    #[test]
    fn r_is_proportional_to_p() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let k_r = Rational::from_int(-6);
        for _ in 0..20 {
            let u = gen::cubic(&mut rng);
            assert_eq!(r_determinant(&u), &k_r * &quartic_invariant(&u));
        }
    }

    #[test]
    fn h_form_vanishes_on_the_diagonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let u = gen::cubic(&mut rng);
            assert!(h_form(&u, &u).is_zero());
        }
    }

    #[test]
    fn h_form_bidegree() {
        let u = factored_cubic();
        let v = x().pow(3);
        let doubled = u.scale_rational(&Rational::from_int(2));
        assert_eq!(
            h_form(&doubled, &v),
            h_form(&u, &v).scale_rational(&Rational::from_int(8))
        );
    }

    /// Independent oracle: solve `v = c1 [g0,u] + c2 [g+,u] + c3 [g-,u] + c4 u`
    /// as a 4x4 rational linear system in the cubic monomial basis.
    fn oracle_coeffs(u: &BiForm<Q>, v: &BiForm<Q>) -> [Rational; 4] {
        let frame = Sl2Frame::new(x(), y()).unwrap();
        let cols = [
            bracket(&frame.g0(), u),
            bracket(&frame.gplus(), u),
            bracket(&frame.gminus(), u),
            u.clone(),
        ];
        let coord = |f: &BiForm<Q>| {
            [f.coeff(3, 0), f.coeff(2, 1), f.coeff(1, 2), f.coeff(0, 3)]
        };
        let mut m: Vec<Vec<Rational>> = (0..4)
            .map(|i| cols.iter().map(|c| coord(c)[i].clone()).collect())
            .collect();
        let mut rhs = coord(v).to_vec();
        // Gaussian elimination with exact pivots.
        for col in 0..4 {
            let pivot = (col..4).find(|&r| !m[r][col].is_zero()).expect("regular");
            m.swap(col, pivot);
            rhs.swap(col, pivot);
            let inv = m[col][col].recip();
            for c in col..4 {
                m[col][c] = &m[col][c] * &inv;
            }
            rhs[col] = &rhs[col] * &inv;
            for r in 0..4 {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone();
                for c in col..4 {
                    m[r][c] = &m[r][c] - &(&f * &m[col][c]);
                }
                rhs[r] = &rhs[r] - &(&f * &rhs[col]);
            }
        }
        [rhs[0].clone(), rhs[1].clone(), rhs[2].clone(), rhs[3].clone()]
    }

    #[test]
    fn reconstruction_matches_linear_oracle() {
        let u = factored_cubic();
        let v = x().pow(3);
        let p = quartic_invariant(&u);
        let a_form = h_form(&u, &v).scale(&p.recip());
        let beta = sigma_form(&u, &v) / p;
        // direct identity
        let rebuilt = &bracket(&a_form, &u) + &u.scale(&beta);
        assert_eq!(rebuilt, v);
        // against the independent system solve
        let frame = Sl2Frame::new(x(), y()).unwrap();
        let [c1, c2, c3, c4] = oracle_coeffs(&u, &v);
        let coords = frame.coords(&a_form);
        assert_eq!(coords.c0, c1);
        assert_eq!(coords.cplus, c2);
        assert_eq!(coords.cminus, c3);
        assert_eq!(beta, c4);
    }

    #[test]
    fn sigma_examples() {
        let u = factored_cubic();
        assert_eq!(sigma_form(&u, &u), Rational::from_int(-48));
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..10 {
            let v = gen::cubic(&mut rng);
            assert!(sigma_form(&x().pow(3), &v).is_zero());
            // sigma(u, u) = p(u) for arbitrary cubics
            assert_eq!(sigma_form(&v, &v), quartic_invariant(&v));
        }
    }

    fn w() -> RatFun {
        RatFun::var()
    }

    fn rf(p: &[i64]) -> RatFun {
        RatFun::from_poly(Poly::from_ints(p))
    }

    #[test]
    fn curve_family_quartic_identity() {
        // p(-(w+3)^3 (u~ + z v~)) as a polynomial identity in (z, w):
        // -192 (w+1)^2 (w+3)^6 z (z-1) ((w-1)(w+3)^3 z - (w+1)(w-3)^3)
        let pair = curve_family(&w());
        let scale = -rf(&[3, 1]).pow(3);
        let pencil = FormPoly::pencil(pair.u.scale(&scale), pair.v.scale(&scale));
        let got = quartic_pencil(&pencil);

        let c = rf(&[-192]) * rf(&[1, 1]).pow(2) * rf(&[3, 1]).pow(6);
        let root_factor_0 = RatFun::zero(); // z = 0 root: constant term
        let a = rf(&[-1, 1]) * rf(&[3, 1]).pow(3); // (w-1)(w+3)^3
        let b = rf(&[1, 1]) * rf(&[-3, 1]).pow(3); // (w+1)(w-3)^3
        // c * z (z - 1) (a z - b) = c*b z - c*(a + b) z^2 + c*a z^3
        let expect = [
            root_factor_0,
            &c * &b,
            -(&c * &(&a + &b)),
            &c * &a,
        ];
        assert_eq!(got.len(), 4, "degree three in z (fourth point at infinity)");
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(&got.get(k).cloned().unwrap_or_else(RatFun::zero), e, "z^{k}");
        }
    }

    #[test]
    fn curve_family_roots_are_cross_ratio() {
        // The three finite roots of p(u~ + z v~) in z are {0, 1, t(w)}.
        let pair = curve_family(&w());
        let pencil = FormPoly::pencil(pair.u.clone(), pair.v.clone());
        let p = quartic_pencil(&pencil);
        assert_eq!(p.len(), 4);
        assert!(p[0].is_zero(), "root at z = 0");
        let sum: RatFun = p.iter().fold(RatFun::zero(), |acc, c| &acc + c);
        assert!(sum.is_zero(), "root at z = 1");
        // cubic coefficient ratio: product of roots = p1... use t(w) directly:
        let t = crate::pvi::t_of_w();
        let eval = |z: &RatFun| {
            let mut acc = RatFun::zero();
            for c in p.iter().rev() {
                acc = &acc * z + c;
            }
            acc
        };
        assert!(eval(&t).is_zero(), "root at z = t(w)");
    }

    #[test]
    fn h_coeffs_match_direct_expansion() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..10 {
            let u = gen::cubic(&mut rng);
            let (a, b) = gen::frame(&mut rng);
            let base = &a.pow(2) * &b;
            let h = h_coeffs(&u, &a, &b).unwrap();
            let frame = Sl2Frame::new(a.clone(), b.clone()).unwrap();
            let pencil = FormPoly::pencil(u.clone(), base.clone());
            let direct = h_form_pencil(&pencil, &base);
            let mut rebuilt = FormPoly::zero();
            for (coeffs, basis) in [
                (&h.h0, frame.g0()),
                (&h.hplus, frame.gplus()),
                (&h.hminus, frame.gminus()),
            ] {
                let as_forms: Vec<BiForm<Q>> =
                    coeffs.iter().map(|c| basis.scale(c)).collect();
                rebuilt = rebuilt.add(&FormPoly::from_coeffs(as_forms));
            }
            assert_eq!(rebuilt, direct);
        }
    }

    #[test]
    fn h_coeffs_degree_bounds() {
        // h+ and h- are degree <= 1; h0 + 8<ab>^3 <u,a^3> z^2 is degree <= 1.
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..10 {
            let u = gen::cubic(&mut rng);
            let (a, b) = gen::frame(&mut rng);
            let h = h_coeffs(&u, &a, &b).unwrap();
            assert!(h.hplus.len() <= 2);
            assert!(h.hminus.len() <= 2);
            let s3 = pairing(&a, &b).pow(3);
            let ua3 = pairing(&u, &a.pow(3));
            let mut h0 = h.h0.clone();
            h0.resize(3, Rational::zero());
            let corrected = &h0[2] + &(&Rational::from_int(8) * &(&s3 * &ua3));
            assert!(corrected.is_zero(), "quadratic term is -8<ab>^3<u,a3>");
        }
    }

    #[test]
    fn h_coeffs_degenerate_frame() {
        let u = factored_cubic();
        let two_x = x().scale_rational(&Rational::from_int(2));
        assert!(matches!(
            h_coeffs(&u, &x(), &two_x),
            Err(ConnectionError::Frame(FormsError::DegenerateFrame))
        ));
    }

    #[test]
    fn ground_state_h_coefficients_verbatim() {
        // h+(z) = -(96(w+1)^3/(w+3)^7) * 8 * ((w-3)^2 + 3(w-1)(w+3) z)
        // h-(z) =  (96(w+1)^3/(w+3)^7) * (w-1) * ((w-3)^2(w+1) - (w+3)(3+w^2) z)
        let pair = curve_family(&w());
        let h = h_coeffs(&pair.u, &BiForm::var_x(), &BiForm::var_y()).unwrap();
        let c = rf(&[96]) * rf(&[1, 1]).pow(3) / rf(&[3, 1]).pow(7);
        let hplus_expect = [
            -(&c * &rf(&[8]) * &rf(&[-3, 1]).pow(2)),
            -(&c * &rf(&[8]) * &rf(&[3]) * &rf(&[-1, 1]) * &rf(&[3, 1])),
        ];
        let hminus_expect = [
            &c * &rf(&[-1, 1]) * &rf(&[-3, 1]).pow(2) * &rf(&[1, 1]),
            -(&c * &rf(&[-1, 1]) * &rf(&[3, 1]) * &rf(&[3, 0, 1])),
        ];
        assert_eq!(h.hplus, hplus_expect);
        assert_eq!(h.hminus, hminus_expect);
    }

    #[test]
    fn residue_is_quarter_g0() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let v = gen::cubic(&mut rng);
            if pairing(&v, &x().pow(3)).is_zero() {
                continue;
            }
            let res = residue_at_zero(&x(), &y(), &v).unwrap();
            assert_eq!(res.c0, Rational::of(-1, 4));
            assert!(res.cplus.is_zero());
            assert!(res.cminus.is_zero());
        }
    }

    #[test]
    fn residue_laurent_slope() {
        // p(a^2 b + z v) = -32 <a,b>^3 <v,a^3> z + O(z^2)
        let mut rng = ChaCha8Rng::seed_from_u64(18);
        for _ in 0..10 {
            let v = gen::cubic(&mut rng);
            let (a, b) = gen::frame(&mut rng);
            let base = &a.pow(2) * &b;
            let p = quartic_pencil(&FormPoly::pencil(base, v.clone()));
            let expect = &Rational::from_int(-32)
                * &(&pairing(&a, &b).pow(3) * &pairing(&v, &a.pow(3)));
            let got = p.get(1).cloned().unwrap_or_else(Rational::zero);
            assert!(p.first().is_none_or(Rational::is_zero));
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn residue_rejects_nongeneric() {
        // <v, x^3> = 0 for v = x^3 (self-pairing of odd degree)
        assert_eq!(
            residue_at_zero(&x(), &y(), &x().pow(3)),
            Err(ConnectionError::NongenericConfiguration)
        );
    }

    #[test]
    fn residue_at_infinity_eigenvectors() {
        // Swapping the pencil, the residue at infinity acts on degree 1
        // by minus the bracket with -(1/4) g0: eigenvalues +-1/4 with
        // eigenvectors (x, y).
        let pair = curve_family(&w());
        let a: BiForm<RatFun> = BiForm::var_x();
        let b: BiForm<RatFun> = BiForm::var_y();
        let res = residue_at_zero(&a, &b, &pair.u).unwrap();
        let frame = Sl2Frame::new(a.clone(), b.clone()).unwrap();
        let res_form = res.to_form(&frame);
        let quarter = RatFun::constant(Rational::of(1, 4));
        // A_inf r = -[res, r]
        assert_eq!(-bracket(&res_form, &a), a.scale(&quarter));
        assert_eq!(
            -bracket(&res_form, &b),
            b.scale(&-(&quarter))
        );
    }

    #[test]
    fn ground_state_solutions() {
        // plus: (w-3)^2 (w^2-1) / ((w-1)(w+3)(w^2+3))
        let plus = solve_lambda0(Sign::Plus).unwrap();
        let expect_plus = rf(&[-3, 1]).pow(2) * rf(&[-1, 0, 1])
            / (rf(&[-1, 1]) * rf(&[3, 1]) * rf(&[3, 0, 1]));
        assert_eq!(plus, expect_plus);
        // minus: -(w-3)^2 / (3(w-1)(w+3))
        let minus = solve_lambda0(Sign::Minus).unwrap();
        let expect_minus = -(rf(&[-3, 1]).pow(2) / (rf(&[3]) * rf(&[-1, 1]) * rf(&[3, 1])));
        assert_eq!(minus, expect_minus);
    }

    #[test]
    fn ground_state_eigenvector_criterion() {
        // <r, [a(u + lambda v, v), r]> = 0 for the solved lambda.
        let pair = curve_family(&w());
        let pencil = FormPoly::pencil(pair.u.clone(), pair.v.clone());
        let h_pencil = h_form_pencil(&pencil, &pair.v);
        let p_pencil = quartic_pencil(&pencil);
        for sign in [Sign::Plus, Sign::Minus] {
            let lambda = solve_lambda0(sign).unwrap();
            let eval_scalar = |cs: &[RatFun]| {
                let mut acc = RatFun::zero();
                for c in cs.iter().rev() {
                    acc = &acc * &lambda + c;
                }
                acc
            };
            let mut h_at = BiForm::zero();
            for k in 0..=h_pencil.degree().unwrap_or(0) {
                h_at = &h_at + &h_pencil.coeff(k).scale(&lambda.pow(k as i32));
            }
            let p_at = eval_scalar(&p_pencil);
            let a_form = h_at.scale(&p_at.recip());
            let r: BiForm<RatFun> = match sign {
                Sign::Plus => BiForm::var_x(),
                Sign::Minus => BiForm::var_y(),
            };
            assert!(pairing(&r, &bracket(&a_form, &r)).is_zero());
        }
    }
}
