//! The catalog of explicit solutions: even coefficient pairs
//! `(f_m, g_m)` for levels `m <= 4` on both branches plus the plus
//! branch at `m = 5`, together with their parameter vectors.
//!
//! Coefficient integers are transcribed verbatim from the source
//! tables in factored shape; a checksum test freezes spot evaluations
//! to guard the transcription.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{lambda_from_fg, level_theta, PviError, PviSolution};
use crate::exact::{Poly, Rational};
use crate::Sign;

/// One catalog row: the even polynomials behind a solution.
#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub m: u32,
    pub sign: Sign,
    pub f: Poly,
    pub g: Poly,
}

impl CatalogEntry {
    pub fn solution(&self) -> PviSolution {
        let lambda = lambda_from_fg(&self.f, &self.g).expect("catalog pair is nondegenerate");
        PviSolution {
            lambda,
            theta: level_theta(self.m, self.sign),
            label: Some((self.m, self.sign)),
        }
    }
}

/// Wire format for one catalog entry: every integer as a decimal
/// string, `f`/`g` listed by even degree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub m: u32,
    pub sign: Sign,
    pub theta: [Rational; 4],
    pub f: Vec<String>,
    pub g: Vec<String>,
}

fn even_strings(p: &Poly) -> Vec<String> {
    let top = p.degree().unwrap_or(0) / 2;
    (0..=top)
        .map(|k| p.coeff(2 * k).numerator().to_string())
        .collect()
}

impl From<&CatalogEntry> for SolutionJson {
    fn from(e: &CatalogEntry) -> Self {
        SolutionJson {
            m: e.m,
            sign: e.sign,
            theta: level_theta(e.m, e.sign).0,
            f: even_strings(&e.f),
            g: even_strings(&e.g),
        }
    }
}

/// In-memory catalog; the standard table is built once and shared.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: BTreeMap<(u32, i8), CatalogEntry>,
}

fn sign_key(sign: Sign) -> i8 {
    sign.factor() as i8
}

fn even(c: &[i64]) -> Poly {
    Poly::from_even_ints(c)
}

impl Catalog {
    pub fn standard() -> Catalog {
        let w2m1 = even(&[-1, 1]); // w^2 - 1
        let w2p3 = even(&[3, 1]); // w^2 + 3
        let scale = |c: i64, p: Poly| p.scale(&Rational::from_int(c));

        let mut cat = Catalog {
            entries: BTreeMap::new(),
        };
        let mut put = |m: u32, sign: Sign, f: Poly, g: Poly| {
            cat.entries.insert((m, sign_key(sign)), CatalogEntry { m, sign, f, g });
        };

        put(0, Sign::Plus, Poly::one(), Poly::zero());
        put(0, Sign::Minus, Poly::zero(), Poly::one());

        put(1, Sign::Plus, Poly::one(), Poly::zero());
        put(1, Sign::Minus, even(&[4]), w2p3.clone());

        put(
            2,
            Sign::Plus,
            scale(12, w2p3.pow(2)),
            w2m1.pow(2),
        );
        put(
            2,
            Sign::Minus,
            scale(16, even(&[7, 1]) * even(&[4, 3, 1])),
            &w2p3 * &even(&[77, 89, 23, 3]),
        );

        put(
            3,
            Sign::Plus,
            scale(8, even(&[3381, 7536, 6291, 2576, 611, 80, 5])),
            w2m1.pow(2) * &w2p3 * even(&[147, 111, 57, 5]),
        );
        put(
            3,
            Sign::Minus,
            scale(12, w2p3.pow(2) * even(&[3528, 7272, 6453, 2460, 678, 84, 5])),
            even(&[
                164052, 590328, 831465, 631260, 294435, 88938, 18207, 2520, 225, 10,
            ]),
        );

        put(
            4,
            Sign::Plus,
            scale(
                4,
                even(&[
                    14619528, 69918552, 140631309, 159541866, 116463663, 58384152, 20911122,
                    5489100, 1072278, 154176, 15729, 1050, 35,
                ]),
            ),
            scale(
                3,
                w2m1.pow(2)
                    * &w2p3
                    * even(&[
                        141372, 402732, 558819, 432297, 209331, 71361, 16497, 2403, 189, 7,
                    ]),
            ),
        );
        put(
            4,
            Sign::Minus,
            scale(
                8,
                even(&[
                    326559519, 1822652766, 4648210677, 6998194368, 7025103459, 5035679226,
                    2678780673, 1084740444, 341288829, 84427122, 16389951, 2449224, 272257,
                    21430, 1099, 28,
                ]),
            ),
            &w2p3
                * &even(&[
                    334968777, 2143174869, 5776302213, 8923510233, 8999893881, 6350646645,
                    3281293773, 1278719217, 383574771, 89689431, 16510551, 2388627, 267339,
                    22239, 1239, 35,
                ]),
        );

        put(
            5,
            Sign::Plus,
            scale(
                6,
                w2p3.pow(2)
                    * even(&[
                        4921440381, 37977143490, 127613420649, 250673770776, 327148723176,
                        304141893048, 210622703024, 112091223944, 46894395098, 15666181052,
                        4231083002, 931314344, 167841056, 24669272, 2918360, 271032, 18849,
                        882, 21,
                    ]),
            ),
            w2m1.pow(2)
                * even(&[
                    6947915832, 44000040942, 133368411033, 248155844508, 316015211160,
                    294283529028, 208710837720, 115644336732, 50998415472, 18167192624,
                    5280068058, 1254027252, 241371320, 36993180, 4399008, 391700, 24840,
                    1026, 21,
                ]),
        );
        cat
    }

    pub fn get(&self, m: u32, sign: Sign) -> Option<&CatalogEntry> {
        self.entries.get(&(m, sign_key(sign)))
    }

    pub fn solution(&self, m: u32, sign: Sign) -> Result<PviSolution, PviError> {
        self.get(m, sign)
            .map(CatalogEntry::solution)
            .ok_or(PviError::NotInCatalog(m, sign))
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values()
    }

    /// Replaces an entry; test hook for perturbation experiments.
    pub fn set(&mut self, entry: CatalogEntry) {
        self.entries
            .insert((entry.m, sign_key(entry.sign)), entry);
    }
}

fn standard() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(Catalog::standard)
}

/// Looks up the standard catalog solution at `(m, sign)`.
pub fn catalog(m: u32, sign: Sign) -> Result<PviSolution, PviError> {
    standard().solution(m, sign)
}
