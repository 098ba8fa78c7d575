//! Integer polynomial gcd through small-prime homomorphic images.
//!
//! Rational-coefficient Euclidean remainder sequences blow up on the
//! degree-several-hundred numerators this crate reduces, so the gcd of
//! primitive integer polynomials is assembled from monic gcd images
//! modulo 62-bit primes, lifted by CRT, and certified by exact division.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

const PRIME_CEILING: u64 = 1 << 62;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the usual twelve-witness set).
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Fixed pool of large primes used for the homomorphic gcd images.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(1024);
        let mut candidate = PRIME_CEILING - 1;
        while out.len() < 1024 {
            if is_prime(candidate) {
                out.push(candidate);
            }
            candidate -= 2;
        }
        out
    })
}

fn reduce_coeff(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    let (_, digits) = r.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0],
        _ => unreachable!("residue exceeds one limb"),
    }
}

fn reduce_poly(a: &[BigInt], p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = a.iter().map(|c| reduce_coeff(c, p)).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Monic gcd in Z_p[x] by plain Euclid with synthetic remainder steps.
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        rem_mod_in_place(&mut a, &b, p);
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&lead) = a.last() {
        let inv = pow_mod(lead, p - 2, p);
        for c in &mut a {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}

fn rem_mod_in_place(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let lead_inv = pow_mod(b[db], p - 2, p);
    while a.len() > db {
        let q = mul_mod(*a.last().unwrap(), lead_inv, p);
        let shift = a.len() - 1 - db;
        if q != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let t = mul_mod(q, bc, p);
                let idx = shift + i;
                a[idx] = (a[idx] + p - t) % p;
            }
        }
        a.pop();
        while a.last() == Some(&0) {
            a.pop();
        }
        if a.is_empty() {
            return;
        }
    }
}

/// CRT-combines `new` (mod `p`) into `acc` (mod `modulus`) in place.
fn crt_combine(acc: &mut [BigInt], modulus: &BigInt, new: &[u64], p: u64) {
    let m_inv = mod_inverse_u64(reduce_coeff(modulus, p), p);
    for (i, slot) in acc.iter_mut().enumerate() {
        let r_new = if i < new.len() { new[i] } else { 0 };
        let r_old = reduce_coeff(slot, p);
        let diff = (r_new + p - r_old) % p;
        let k = mul_mod(diff, m_inv, p);
        *slot += modulus * BigInt::from(k);
    }
}

fn mod_inverse_u64(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Maps residues in `[0, m)` to the symmetric range `(-m/2, m/2]`.
fn symmetric_lift(coeffs: &[BigInt], modulus: &BigInt) -> Vec<BigInt> {
    let half = modulus / 2;
    coeffs
        .iter()
        .map(|c| if c > &half { c - modulus } else { c.clone() })
        .collect()
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// Content of an integer polynomial, signed so the primitive part has a
/// positive leading coefficient.
pub fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
    }
    if a.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    g
}

pub fn primitive_part(a: &[BigInt]) -> Vec<BigInt> {
    let c = content(a);
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x / &c).collect()
}

/// Exact quotient of integer polynomials, or `None` when `g` does not
/// divide `a` over the rationals. Correct for primitive `g` by Gauss's
/// lemma: a rational quotient of primitive polynomials has integer
/// coefficients, so any non-exact coefficient step certifies failure.
pub fn div_exact_int(a: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    if g.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < g.len() {
        return None;
    }
    let mut rem: Vec<BigInt> = a.to_vec();
    let dg = g.len() - 1;
    let lead = &g[dg];
    let mut quot = vec![BigInt::zero(); a.len() - g.len() + 1];
    for qi in (0..quot.len()).rev() {
        let top = rem[qi + dg].clone();
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (i, gc) in g.iter().enumerate() {
            let prod = &q * gc;
            rem[qi + i] -= prod;
        }
        quot[qi] = q;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(quot)
    } else {
        None
    }
}

/// Gcd of primitive integer polynomials, primitive with positive leading
/// coefficient. Unlucky primes are filtered by degree minimality; the
/// stabilized CRT image is certified by exact trial division.
pub fn gcd_primitive_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(!a.is_empty() && !b.is_empty());
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    let lc_gcd: BigInt = a.last().unwrap().gcd(b.last().unwrap());

    let mut image: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut image_degree = usize::MAX;
    let mut last_candidate: Option<Vec<BigInt>> = None;

    for &p in primes() {
        let ap = reduce_poly(a, p);
        let bp = reduce_poly(b, p);
        if ap.len() != a.len() || bp.len() != b.len() {
            continue; // p divides a leading coefficient
        }
        let mut gp = gcd_mod(ap, bp, p);
        if gp.len() == 1 {
            return vec![BigInt::one()];
        }
        let deg = gp.len() - 1;
        if deg > image_degree {
            continue; // unlucky prime
        }
        // Impose the true leading coefficient divisor before lifting.
        let scale = reduce_coeff(&lc_gcd, p);
        for c in &mut gp {
            *c = mul_mod(*c, scale, p);
        }
        if deg < image_degree {
            image_degree = deg;
            modulus = BigInt::from(p);
            image = gp.iter().map(|&c| BigInt::from(c)).collect();
            last_candidate = None;
        } else {
            crt_combine(&mut image, &modulus, &gp, p);
            modulus *= BigInt::from(p);
        }
        let candidate = trim(primitive_part(&symmetric_lift(&image, &modulus)));
        if candidate.is_empty() {
            continue;
        }
        let stabilized = last_candidate.as_deref() == Some(candidate.as_slice());
        last_candidate = Some(candidate.clone());
        if stabilized
            && div_exact_int(a, &candidate).is_some()
            && div_exact_int(b, &candidate).is_some()
        {
            return candidate;
        }
    }
    unreachable!("prime pool exhausted during polynomial gcd");
}
