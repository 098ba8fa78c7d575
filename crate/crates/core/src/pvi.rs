//! Painleve VI solution objects over the curve parametrization: the
//! implicit parameter map `t(w)`, the derivative chain, the exact
//! residual certificate, parameter conversions, and the catalog of
//! explicit solutions.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{Poly, RatFun, Rational};
use crate::Sign;

pub mod catalog;

pub use catalog::{catalog, Catalog, CatalogEntry};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PviError {
    #[error("not in catalog: m = {0}, sign = {1}")]
    NotInCatalog(u32, Sign),
    #[error("degenerate solution candidate: lambda is identically 0, 1 or t")]
    DegenerateCandidate,
    #[error("degenerate coefficient pair: (3 + w^2) f - 24 g vanishes identically")]
    DegenerateFamily,
}

/// The four-component parameter vector, restricted to rational entries.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Theta(pub [Rational; 4]);

impl Theta {
    pub fn new(t1: Rational, t2: Rational, t3: Rational, t4: Rational) -> Self {
        Theta([t1, t2, t3, t4])
    }

    pub fn dot(&self, other: &Theta) -> Rational {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, c: &Rational) -> Theta {
        Theta(std::array::from_fn(|i| &self.0[i] * c))
    }

    pub fn sub(&self, other: &Theta) -> Theta {
        Theta(std::array::from_fn(|i| &self.0[i] - &other.0[i]))
    }
}

impl std::fmt::Display for Theta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// `mu = (1/2, 1/2, 1/2, 1/2)`; `mu . mu = 1`.
pub fn mu() -> Theta {
    let half = Rational::of(1, 2);
    Theta(std::array::from_fn(|_| half.clone()))
}

/// `sign (2m + 1) mu`, the parameter vector of the level-`m` solutions.
pub fn level_theta(m: u32, sign: Sign) -> Theta {
    mu().scale(&Rational::from_int(sign.factor() * (2 * i64::from(m) + 1)))
}

/// A solution candidate: an algebraic function of `w` plus parameters.
#[derive(Clone, PartialEq, Debug)]
pub struct PviSolution {
    pub lambda: RatFun,
    pub theta: Theta,
    pub label: Option<(u32, Sign)>,
}

impl PviSolution {
    pub fn new(lambda: RatFun, theta: Theta) -> Self {
        PviSolution {
            lambda,
            theta,
            label: None,
        }
    }

    /// Canonical equality: coefficient-wise reduced rational functions
    /// plus exact parameter equality. Labels are bookkeeping only.
    pub fn same_solution(&self, other: &PviSolution) -> bool {
        self.lambda == other.lambda && self.theta == other.theta
    }
}

/// The classic parameter quadruple `(alpha, beta, gamma, delta)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassicParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
}

/// `(alpha, beta, gamma, delta) =
///  (1/2 (t4 - 1)^2, -1/2 t1^2, 1/2 t3^2, 1/2 (1 - t2^2))`.
pub fn theta_to_classic(theta: &Theta) -> ClassicParams {
    let half = Rational::of(1, 2);
    let [t1, t2, t3, t4] = &theta.0;
    ClassicParams {
        alpha: &half * &(t4 - &Rational::one()).square(),
        beta: -(&half * &t1.square()),
        gamma: &half * &t3.square(),
        delta: &half * &(Rational::one() - t2.square()),
    }
}

/// The moving cross-ratio `t(w) = (1+w)(-3+w)^3 / ((-1+w)(3+w)^3)`.
pub fn t_of_w() -> RatFun {
    let num = Poly::from_ints(&[1, 1]) * Poly::from_ints(&[-3, 1]).pow(3);
    let den = Poly::from_ints(&[-1, 1]) * Poly::from_ints(&[3, 1]).pow(3);
    RatFun::new(num, den).expect("nonzero denominator")
}

/// Assembles the standard solution shape from an even coefficient pair:
///
/// ```text
/// lambda(w) = ((-3+w)^2 / ((-1+w)(3+w))) *
///             ((-1+w^2) f + 8 g) / ((3+w^2) f - 24 g)
/// ```
pub fn lambda_from_fg(f: &Poly, g: &Poly) -> Result<RatFun, PviError> {
    let num_inner = Poly::from_ints(&[-1, 0, 1]) * f + Poly::from_ints(&[8]) * g;
    let den_inner = Poly::from_ints(&[3, 0, 1]) * f - Poly::from_ints(&[24]) * g;
    if den_inner.is_zero() {
        return Err(PviError::DegenerateFamily);
    }
    let num = Poly::from_ints(&[-3, 1]).pow(2) * num_inner;
    let den = Poly::from_ints(&[-1, 1]) * Poly::from_ints(&[3, 1]) * den_inner;
    Ok(RatFun::new(num, den).expect("nonzero denominator"))
}

/// Derivative with respect to `t` through the implicit parametrization:
/// `dl/dt = (dl/dw) / (dt/dw)` with
/// `1/(dt/dw) = (-1+w)^2 (3+w)^4 / (16 w^2 (-3+w)^2)`.
pub fn d_dt(lambda: &RatFun) -> RatFun {
    let num = Poly::from_ints(&[-1, 1]).pow(2) * Poly::from_ints(&[3, 1]).pow(4);
    let den = Poly::from_ints(&[0, 0, 16]) * Poly::from_ints(&[-3, 1]).pow(2);
    let prefactor = RatFun::new(num, den).expect("nonzero denominator");
    lambda.derivative() * prefactor
}

/// Unreduced numerator/denominator pair used to pile the residual terms
/// over one common denominator before the single final reduction.
struct RawRat {
    num: Poly,
    den: Poly,
}

impl RawRat {
    fn from_ratfun(r: &RatFun) -> Self {
        RawRat {
            num: r.num().clone(),
            den: r.den().clone(),
        }
    }

    fn sub(self, other: RawRat) -> RawRat {
        RawRat {
            num: &self.num * &other.den - &other.num * &self.den,
            den: &self.den * &other.den,
        }
    }

    fn reduce(self) -> RatFun {
        RatFun::new(self.num, self.den).expect("nonzero denominator")
    }
}

/// The exact residual certificate: second derivative minus the full
/// right-hand side of the sixth Painleve equation, everything expressed
/// in `w` through `t = t(w)`. The zero function certifies a solution.
///
/// ```text
/// l'' = 1/2 (1/l + 1/(l-1) + 1/(l-t)) l'^2
///     - (1/t + 1/(t-1) + 1/(l-t)) l'
///     + l(l-1)(l-t)/(2 t^2 (t-1)^2) *
///       ((t4-1)^2 - t1^2 t/l^2 + t3^2 (t-1)/(l-1)^2 + (1-t2^2) t(t-1)/(l-t)^2)
/// ```
///
/// The candidate must not be identically `0`, `1`, or `t`, which would
/// make the right-hand side itself degenerate.
pub fn pvi_residual(s: &PviSolution) -> Result<RatFun, PviError> {
    let lam = &s.lambda;
    let t = t_of_w();
    let one = RatFun::one();
    if lam.is_zero() || *lam == one || *lam == t {
        return Err(PviError::DegenerateCandidate);
    }
    let [t1, t2, t3, t4] = &s.theta.0;

    let lam_m1 = lam - &one;
    let lam_mt = lam - &t;
    let t_m1 = &t - &one;
    let lp = d_dt(lam);
    let lpp = d_dt(&lp);
    let lp_sq = &lp * &lp;

    // Every right-hand-side term as an unreduced pair over products of
    // the reduced pieces; the numerator polynomial of the final
    // difference collapses to zero exactly for true solutions.
    let mut terms: Vec<RawRat> = Vec::new();
    let half = Rational::of(1, 2);

    for d in [lam, &lam_m1, &lam_mt] {
        terms.push(RawRat {
            num: (lp_sq.num() * d.den()).scale(&half),
            den: lp_sq.den() * d.num(),
        });
    }
    for d in [&t, &t_m1, &lam_mt] {
        terms.push(RawRat {
            num: -(lp.num() * d.den()),
            den: lp.den() * d.num(),
        });
    }

    // prefactor l(l-1)(l-t) / (2 t^2 (t-1)^2), reduced once up front
    let pref = lam * &lam_m1 * &lam_mt
        / (RatFun::constant(Rational::from_int(2)) * t.square() * t_m1.square());
    let c_alpha = (t4 - &Rational::one()).square();
    let c_beta = -t1.square();
    let c_gamma = t3.square();
    let c_delta = Rational::one() - t2.square();

    // (t4-1)^2
    terms.push(RawRat {
        num: pref.num().scale(&c_alpha),
        den: pref.den().clone(),
    });
    // - t1^2 t / l^2
    terms.push(RawRat {
        num: (&(pref.num() * t.num()) * &(lam.den() * lam.den())).scale(&c_beta),
        den: &(pref.den() * t.den()) * &(lam.num() * lam.num()),
    });
    // t3^2 (t-1) / (l-1)^2
    terms.push(RawRat {
        num: (&(pref.num() * t_m1.num()) * &(lam_m1.den() * lam_m1.den())).scale(&c_gamma),
        den: &(pref.den() * t_m1.den()) * &(lam_m1.num() * lam_m1.num()),
    });
    // (1 - t2^2) t (t-1) / (l-t)^2
    let t_tm1 = &t * &t_m1;
    terms.push(RawRat {
        num: (&(pref.num() * t_tm1.num()) * &(lam_mt.den() * lam_mt.den())).scale(&c_delta),
        den: &(pref.den() * t_tm1.den()) * &(lam_mt.num() * lam_mt.num()),
    });

    let mut acc = RawRat::from_ratfun(&lpp);
    for term in terms {
        acc = acc.sub(term);
    }
    Ok(acc.reduce())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(p: &[i64]) -> RatFun {
        RatFun::from_poly(Poly::from_ints(p))
    }

    #[test]
    fn cross_ratio_values() {
        let t = t_of_w();
        assert_eq!(t.eval(&Rational::from_int(-1)), Some(Rational::zero()));
        assert_eq!(t.eval(&Rational::from_int(3)), Some(Rational::zero()));
        assert_eq!(t.eval(&Rational::from_int(1)), None, "pole at w = 1");
        assert_eq!(t.eval(&Rational::from_int(-3)), None, "pole at w = -3");
    }

    #[test]
    fn lambda_from_unit_pairs() {
        // (f, g) = (1, 0) gives the plus ground state
        let plus = lambda_from_fg(&Poly::one(), &Poly::zero()).unwrap();
        let expect = rf(&[-3, 1]).pow(2) * rf(&[-1, 0, 1])
            / (rf(&[-1, 1]) * rf(&[3, 1]) * rf(&[3, 0, 1]));
        assert_eq!(plus, expect);
        // (f, g) = (0, 1) gives the minus ground state
        let minus = lambda_from_fg(&Poly::zero(), &Poly::one()).unwrap();
        let expect = -(rf(&[-3, 1]).pow(2) / (rf(&[3]) * rf(&[-1, 1]) * rf(&[3, 1])));
        assert_eq!(minus, expect);
    }

    #[test]
    fn lambda_level_one_minus() {
        // (f, g) = (4, 3 + w^2): -(w-3)^2 (5 + 3w^2) / (5 (w-1)(w+3)(3+w^2))
        let lam = lambda_from_fg(&Poly::from_ints(&[4]), &Poly::from_ints(&[3, 0, 1])).unwrap();
        let expect = -(rf(&[-3, 1]).pow(2) * rf(&[5, 0, 3])
            / (rf(&[5]) * rf(&[-1, 1]) * rf(&[3, 1]) * rf(&[3, 0, 1])));
        assert_eq!(lam, expect);
    }

    #[test]
    fn lambda_scaling_invariance() {
        let f = Poly::from_even_ints(&[3, 1]);
        let g = Poly::from_even_ints(&[-1, 2]);
        let c = Rational::of(-7, 3);
        assert_eq!(
            lambda_from_fg(&f, &g).unwrap(),
            lambda_from_fg(&f.scale(&c), &g.scale(&c)).unwrap()
        );
    }

    #[test]
    fn degenerate_pair_rejected() {
        // f = 24, g = 3 + w^2 makes (3+w^2) f - 24 g vanish
        assert_eq!(
            lambda_from_fg(&Poly::from_ints(&[24]), &Poly::from_ints(&[3, 0, 1])),
            Err(PviError::DegenerateFamily)
        );
    }

    #[test]
    fn chain_rule_identity() {
        assert_eq!(d_dt(&t_of_w()), RatFun::one());
        assert!(d_dt(&RatFun::constant(Rational::of(5, 7))).is_zero());
    }

    #[test]
    fn derivative_matches_quotient_rule_oracle() {
        // same value computed as (dl/dw) / (dt/dw) with dt/dw from the
        // raw quotient rule, no pre-simplified prefactor
        let lam = catalog(0, Sign::Plus).unwrap().lambda;
        let t = t_of_w();
        let dt_dw = RatFun::new(
            t.num().derivative() * t.den() - t.num() * &t.den().derivative(),
            t.den() * t.den(),
        )
        .unwrap();
        assert_eq!(d_dt(&lam), lam.derivative() / dt_dw);
    }

    #[test]
    fn residual_zero_for_ground_state() {
        let s = catalog(0, Sign::Plus).unwrap();
        assert!(pvi_residual(&s).unwrap().is_zero());
        let s = catalog(0, Sign::Minus).unwrap();
        assert!(pvi_residual(&s).unwrap().is_zero());
    }

    #[test]
    fn residual_zero_across_the_level_one_coincidence() {
        // the plus ground-state function also solves at theta = 3 mu
        let s = PviSolution::new(
            catalog(0, Sign::Plus).unwrap().lambda,
            level_theta(1, Sign::Plus),
        );
        assert!(pvi_residual(&s).unwrap().is_zero());
    }

    #[test]
    fn residual_nonzero_for_wrong_parameters() {
        // the level-one minus function does not solve at theta = -mu
        let s = PviSolution::new(
            catalog(1, Sign::Minus).unwrap().lambda,
            level_theta(0, Sign::Minus),
        );
        assert!(!pvi_residual(&s).unwrap().is_zero());
    }

    #[test]
    fn residual_rejects_degenerate_candidates() {
        for lam in [RatFun::zero(), RatFun::one(), t_of_w()] {
            let s = PviSolution::new(lam, mu());
            assert_eq!(pvi_residual(&s), Err(PviError::DegenerateCandidate));
        }
    }

    #[test]
    fn classic_parameters() {
        let c = theta_to_classic(&mu());
        assert_eq!(c.alpha, Rational::of(1, 8));
        assert_eq!(c.beta, Rational::of(-1, 8));
        assert_eq!(c.gamma, Rational::of(1, 8));
        assert_eq!(c.delta, Rational::of(3, 8));

        let c = theta_to_classic(&Theta::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
        ));
        assert_eq!(
            (c.alpha, c.beta, c.gamma, c.delta),
            (
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::of(1, 2)
            )
        );
    }

    #[test]
    fn sign_reflections_fix_classic_parameters() {
        // negating t1..t3 and sending t4 to 2 - t4 leaves the equation
        let theta = Theta::new(
            Rational::of(3, 2),
            Rational::of(-1, 2),
            Rational::of(5, 2),
            Rational::of(7, 2),
        );
        let reflected = Theta::new(
            -theta.0[0].clone(),
            -theta.0[1].clone(),
            -theta.0[2].clone(),
            Rational::from_int(2) - theta.0[3].clone(),
        );
        assert_eq!(theta_to_classic(&theta), theta_to_classic(&reflected));
    }
}
