//! Equivariant self-dual monad data: the closed-form coefficient tables,
//! the injectivity and isotropy verifier, and representation-space
//! dimension bookkeeping.
//!
//! For level `m` the source space is indexed by `l` with
//! `0 <= l <= m - 1` and `l = m - 1 (mod 2)`; the component map on the
//! `l`-th summand carries one coefficient `a_{l,p}` per transvectant
//! order `0 <= p <= min(2l, 3)`.

use std::collections::BTreeMap;

use crate::exact::{Rational, RootScalar};
use crate::report::{Case, VerificationReport};

/// Coefficient table `(l, p) -> a_{l,p}` for one level `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonadCoeffs {
    m: u32,
    entries: BTreeMap<(u32, u32), RootScalar>,
}

/// Summand indices `l` of the source space at level `m`.
pub fn level_indices(m: u32) -> Vec<u32> {
    (0..m).filter(|l| l % 2 == (m + 1) % 2).collect()
}

impl MonadCoeffs {
    /// The closed-form coefficient set:
    ///
    /// ```text
    /// a_{l,0} = (2l-1) sqrt(9(2m+1)^2 - (2l+3)^2)
    /// a_{l,1} = (2l-1) sqrt(  (2m+1)^2 - (2l+3)^2)
    /// a_{l,2} = (2l+3) sqrt(  (2m+1)^2 - (2l-1)^2)
    /// a_{l,3} = (2l+3) sqrt(9(2m+1)^2 - (2l-1)^2)
    /// ```
    ///
    /// with every square root on the nonnegative branch and radicands
    /// renormalized squarefree. Level 0 has an empty index set.
    pub fn generate(m: u32) -> Self {
        let mut entries = BTreeMap::new();
        let s = (2 * i64::from(m) + 1).pow(2);
        for l in level_indices(m) {
            let li = i64::from(l);
            let lo = 2 * li - 1;
            let hi = 2 * li + 3;
            let radicals = [
                (lo, 9 * s - hi * hi),
                (lo, s - hi * hi),
                (hi, s - lo * lo),
                (hi, 9 * s - lo * lo),
            ];
            for (p, &(factor, radicand)) in radicals.iter().enumerate() {
                if p as u32 > (2 * l).min(3) {
                    break;
                }
                debug_assert!(radicand >= 0, "negative radicand at l={l} p={p}");
                let value = RootScalar::sqrt(radicand as u64)
                    .scale(&Rational::from_int(factor));
                entries.insert((l, p as u32), value);
            }
        }
        MonadCoeffs { m, entries }
    }

    pub fn level(&self) -> u32 {
        self.m
    }

    pub fn get(&self, l: u32, p: u32) -> Option<&RootScalar> {
        self.entries.get(&(l, p))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32), &RootScalar)> {
        self.entries.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Replaces one entry; test hook for perturbation experiments.
    pub fn set(&mut self, l: u32, p: u32, value: RootScalar) {
        self.entries.insert((l, p), value);
    }

    /// Rescales every entry of the `l`-th summand by a common rational.
    pub fn scale_level(&mut self, l: u32, factor: &Rational) {
        for ((li, _), v) in self.entries.iter_mut() {
            if *li == l {
                *v = v.scale(factor);
            }
        }
    }
}

/// Checks the monad conditions on a coefficient table.
///
/// - injectivity: `a_{l,0} != 0` for every `l`;
/// - diagonal isotropy (rational identities on squares):
///   `(2l-1)^2 a_{l,2}^2 = (2l+1) a_{l,0}^2 + 2l(2l-3) a_{l,1}^2` for `l >= 1`,
///   `(2l-1)^2 a_{l,3}^2 = (2l+2)(2l+5) a_{l,0}^2 - 9(2l+1) a_{l,1}^2` for `l >= 2`;
/// - off-diagonal isotropy, compared as canonical root scalars so signs
///   and radicands must agree, not just squares:
///   `a_{l,0} a_{l+2,2} = a_{l,1} a_{l+2,3}` for `l >= 1` with `l + 2` present.
///
/// Conditions whose referenced entries fall outside `p <= min(2l, 3)`
/// are skipped. Failures are cases in the report, never panics.
pub fn verify_monad(c: &MonadCoeffs) -> VerificationReport {
    let mut cases = Vec::new();
    let indices = level_indices(c.m);

    for &l in &indices {
        let a0 = c.get(l, 0).expect("a_{l,0} present");
        cases.push(Case::check(
            format!("injectivity l={l}"),
            !a0.is_zero(),
            format!("a[{l},0] = {a0}"),
        ));
    }

    for &l in &indices {
        let li = i64::from(l);
        if l >= 1 {
            let lhs = c.get(l, 2).expect("a_{l,2} present").square()
                * Rational::from_int((2 * li - 1).pow(2));
            let rhs = c.get(l, 0).unwrap().square() * Rational::from_int(2 * li + 1)
                + c.get(l, 1).unwrap().square()
                    * Rational::from_int(2 * li * (2 * li - 3));
            cases.push(Case::check(
                format!("diagonal-1 l={l}"),
                lhs == rhs,
                format!("lhs = {lhs}, rhs = {rhs}"),
            ));
        }
        if l >= 2 {
            let lhs = c.get(l, 3).expect("a_{l,3} present").square()
                * Rational::from_int((2 * li - 1).pow(2));
            let rhs = c.get(l, 0).unwrap().square()
                * Rational::from_int((2 * li + 2) * (2 * li + 5))
                - c.get(l, 1).unwrap().square() * Rational::from_int(9 * (2 * li + 1));
            cases.push(Case::check(
                format!("diagonal-2 l={l}"),
                lhs == rhs,
                format!("lhs = {lhs}, rhs = {rhs}"),
            ));
        }
    }

    for &l in &indices {
        if l < 1 || !indices.contains(&(l + 2)) {
            continue;
        }
        let lhs = c.get(l, 0).unwrap() * c.get(l + 2, 2).unwrap();
        let rhs = c.get(l, 1).unwrap() * c.get(l + 2, 3).unwrap();
        cases.push(Case::check(
            format!("off-diagonal l={l},{}", l + 2),
            lhs == rhs,
            format!("lhs = {lhs}, rhs = {rhs}"),
        ));
    }

    VerificationReport::new(format!("monad verify --m {}", c.m), cases)
}

/// Dimension bookkeeping for the monad spaces at level `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpaceDims {
    pub m: u32,
    pub dim_w: u32,
    pub dim_v_hat: u32,
    pub dim_v: u32,
    pub rank: i64,
    pub c2: u32,
}

/// `dim W = sum (2l+1)` over the level indices; the ambient middle space
/// stacks every odd irreducible `2j+1` for `0 <= j <= m`, so
/// `dim V^ = sum (2j+2) = (m+1)(m+2)`; the bundle rank comes out as
/// `dim V - 2 dim W = 2` and the instanton number as `dim W = m(m+1)/2`.
pub fn space_dims(m: u32) -> SpaceDims {
    let dim_w: u32 = level_indices(m).iter().map(|&l| 2 * l + 1).sum();
    let dim_v_hat = (m + 1) * (m + 2);
    // Splitting off the trivial summand with fiber irrep (2m-1) leaves V.
    let dim_v = dim_v_hat - 2 * m;
    let rank = i64::from(dim_v_hat) - 2 * i64::from(dim_w) - 2 * i64::from(m);
    SpaceDims {
        m,
        dim_w,
        dim_v_hat,
        dim_v,
        rank,
        c2: dim_w,
    }
}
