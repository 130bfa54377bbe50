//! Arithmetic in GF(p^k) for odd primes p.
//!
//! Elements are encoded as a single integer code whose base-p digits, least
//! significant first, are the coefficients of the element in the polynomial
//! basis `1, x, x^2, ..., x^(k-1)`. The extension modulus is the first monic
//! irreducible of degree k when monic polynomials are ordered by the integer
//! `c_{k-1} p^{k-1} + ... + c_1 p + c_0` built from their lower coefficients.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

// p >= 3 and p^k <= 2^16 bound the degree.
const MAX_DEGREE: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported, the order must be odd")]
    EvenCharacteristic,
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported bound {MAX_ORDER}")]
    TooLarge(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("code {code} is not an element of GF({q})")]
    OutOfRange { code: u32, q: u32 },
}

/// An element of a finite field, identified by its code.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a raw code without checking it against a field.
    pub const fn from_code(code: u32) -> Self {
        FieldElement(code)
    }

    pub const fn code(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parameters of GF(p^k) together with precomputed inverses.
#[derive(Clone)]
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    /// Lower coefficients c_0..c_{k-1} of the monic modulus; empty for prime fields.
    modulus: Vec<u32>,
    inverses: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}

impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q` into `(p, k)` with `q = p^k`, if it is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let divisors = prime_divisors(q);
    if divisors.len() != 1 {
        return None;
    }
    let p = divisors[0];
    let mut k = 0;
    let mut rest = q;
    while rest > 1 {
        rest /= p;
        k += 1;
    }
    Some((p, k))
}

impl Field {
    /// Builds GF(p^k) with the deterministic modulus.
    pub fn new(p: u64, k: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p == 2 {
            return Err(FieldError::EvenCharacteristic);
        }
        if k < 1 {
            return Err(FieldError::ZeroDegree);
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(FieldError::TooLarge(p.saturating_pow(k)))?;
        let (p, q) = (p as u32, q as u32);
        let modulus = if k == 1 {
            Vec::new()
        } else {
            first_irreducible(p, k as usize)
        };
        let mut field = Field {
            p,
            k,
            q,
            modulus,
            inverses: Vec::new(),
        };
        field.inverses = (0..q)
            .map(|c| {
                if c == 0 {
                    0
                } else {
                    field.pow(FieldElement(c), u64::from(q) - 2).0
                }
            })
            .collect();
        Ok(field)
    }

    /// Builds the field of order `q`, which must be an odd prime power.
    pub fn with_order(q: u64) -> Result<Self, FieldError> {
        if q.is_multiple_of(2) && q > 0 {
            return Err(FieldError::EvenCharacteristic);
        }
        let (p, k) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        Field::new(p, k)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Lower coefficients `c_0, ..., c_{k-1}` of the monic modulus, or `None` for a prime field.
    pub fn modulus(&self) -> Option<&[u32]> {
        if self.k == 1 {
            None
        } else {
            Some(&self.modulus)
        }
    }

    pub fn element(&self, code: u32) -> Result<FieldElement, FieldError> {
        if code < self.q {
            Ok(FieldElement(code))
        } else {
            Err(FieldError::OutOfRange { code, q: self.q })
        }
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q).map(FieldElement)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.q).map(FieldElement)
    }

    /// Image of the integer `n` under the ring map Z -> GF(q).
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(i64::from(self.p)) as u32)
    }

    fn digits(&self, x: FieldElement) -> [u32; MAX_DEGREE] {
        let mut out = [0; MAX_DEGREE];
        let mut c = x.0;
        for d in out.iter_mut().take(self.k as usize) {
            *d = c % self.p;
            c /= self.p;
        }
        out
    }

    fn encode(&self, digits: &[u32]) -> FieldElement {
        let code = digits[..self.k as usize]
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.p + d);
        FieldElement(code)
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement((x.0 + y.0) % self.p);
        }
        let (a, b) = (self.digits(x), self.digits(y));
        let mut s = [0; MAX_DEGREE];
        for i in 0..self.k as usize {
            s[i] = (a[i] + b[i]) % self.p;
        }
        self.encode(&s)
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement((self.p - x.0) % self.p);
        }
        let mut a = self.digits(x);
        for d in a.iter_mut().take(self.k as usize) {
            *d = (self.p - *d) % self.p;
        }
        self.encode(&a)
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement(((u64::from(x.0) * u64::from(y.0)) % u64::from(self.p)) as u32);
        }
        let k = self.k as usize;
        let p = u64::from(self.p);
        let (a, b) = (self.digits(x), self.digits(y));
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + u64::from(a[i]) * u64::from(b[j])) % p;
            }
        }
        // x^k = -(c_0 + c_1 x + ... + c_{k-1} x^{k-1})
        for deg in (k..2 * k - 1).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &c) in self.modulus.iter().enumerate() {
                let slot = &mut prod[deg - k + i];
                *slot = (*slot + p * p - lead * u64::from(c) % p) % p;
            }
        }
        let mut digits = [0u32; MAX_DEGREE];
        for (d, &c) in digits.iter_mut().zip(&prod[..k]) {
            *d = c as u32;
        }
        self.encode(&digits)
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement, FieldError> {
        if x.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(FieldElement(self.inverses[x.0 as usize]))
        }
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, x: FieldElement, mut e: u64) -> FieldElement {
        let mut base = x;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, x: FieldElement) -> Result<u64, FieldError> {
        if x.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let mut order = u64::from(self.q) - 1;
        for r in prime_divisors(order) {
            while order % r == 0 && self.pow(x, order / r) == FieldElement::ONE {
                order /= r;
            }
        }
        Ok(order)
    }

    /// The generator of the multiplicative group with the smallest code.
    pub fn primitive_root(&self) -> FieldElement {
        let n = u64::from(self.q) - 1;
        let divisors = prime_divisors(n);
        self.nonzero()
            .find(|&g| divisors.iter().all(|&r| self.pow(g, n / r) != FieldElement::ONE))
            .expect("every finite field has a primitive root")
    }
}

fn monic_from_index(index: u64, p: u32, k: usize) -> Vec<u32> {
    let mut lower = vec![0; k];
    let mut rest = index;
    for c in lower.iter_mut() {
        *c = (rest % u64::from(p)) as u32;
        rest /= u64::from(p);
    }
    lower
}

/// Full coefficient vector (constant term first, leading 1 last) of a monic polynomial.
fn full_monic(lower: &[u32]) -> Vec<u32> {
    let mut v = lower.to_vec();
    v.push(1);
    v
}

fn has_root(lower: &[u32], p: u32) -> bool {
    let full = full_monic(lower);
    (0..p).any(|x| horner(&full, p, x) == 0)
}

fn horner(coeffs: &[u32], p: u32, x: u32) -> u32 {
    let p = u64::from(p);
    coeffs
        .iter()
        .rev()
        .fold(0u64, |acc, &c| (acc * u64::from(x) + u64::from(c)) % p) as u32
}

/// Remainder of `num` modulo the monic `den`, both constant-term first.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let p = u64::from(p);
    let mut r: Vec<u64> = num.iter().map(|&c| u64::from(c)).collect();
    let dl = den.len();
    while r.len() >= dl {
        let lead = *r.last().unwrap();
        let shift = r.len() - dl;
        if lead != 0 {
            for (i, &c) in den.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - lead * u64::from(c) % p) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

fn is_irreducible(lower: &[u32], p: u32) -> bool {
    let k = lower.len();
    if has_root(lower, p) {
        return false;
    }
    if k <= 3 {
        return true;
    }
    let full = full_monic(lower);
    (2..=k / 2).all(|d| {
        let count = u64::from(p).pow(d as u32);
        (0..count).all(|idx| {
            let divisor = full_monic(&monic_from_index(idx, p, d));
            poly_rem(&full, &divisor, p).iter().any(|&c| c != 0)
        })
    })
}

fn first_irreducible(p: u32, k: usize) -> Vec<u32> {
    let count = u64::from(p).pow(k as u32);
    (0..count)
        .map(|idx| monic_from_index(idx, p, k))
        .find(|lower| is_irreducible(lower, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(c: u32) -> FieldElement {
        FieldElement::from_code(c)
    }

    #[test]
    fn prime_field_has_no_modulus() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.order(), 5);
        assert!(f.modulus().is_none());
    }

    #[test]
    fn gf9_modulus_is_x2_plus_1() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.order(), 9);
        assert_eq!(f.modulus(), Some(&[1, 0][..]));
    }

    #[test]
    fn modulus_matches_exhaustive_scan() {
        // A monic of degree 2 or 3 is irreducible iff it has no root; scan in index order.
        for &(p, k) in &[(3u64, 2u32), (5, 2), (3, 3), (7, 2), (5, 3)] {
            let expected = (0..p.pow(k))
                .map(|idx| {
                    (0..k)
                        .map(|i| ((idx / p.pow(i)) % p) as u32)
                        .collect::<Vec<_>>()
                })
                .find(|lower| {
                    (0..p).all(|x| {
                        let value: u64 = lower
                            .iter()
                            .enumerate()
                            .map(|(i, &c)| u64::from(c) * x.pow(i as u32))
                            .sum::<u64>()
                            + x.pow(k);
                        !value.is_multiple_of(p)
                    })
                })
                .unwrap();
            let f = Field::new(p, k).unwrap();
            assert_eq!(f.modulus().unwrap(), &expected[..], "p={p} k={k}");
        }
    }

    #[test]
    fn degree_four_modulus_is_irreducible() {
        let f = Field::new(3, 4).unwrap();
        let m = f.modulus().unwrap().to_vec();
        // No factor of degree 1 or 2: checked by brute-force polynomial division.
        assert!(!has_root(&m, 3));
        for idx in 0..9 {
            let d = full_monic(&monic_from_index(idx, 3, 2));
            assert!(poly_rem(&full_monic(&m), &d, 3).iter().any(|&c| c != 0));
        }
        assert_eq!(f.multiplicative_order(f.primitive_root()).unwrap(), 80);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(2, 3).unwrap_err(), FieldError::EvenCharacteristic);
        assert_eq!(Field::new(9, 1).unwrap_err(), FieldError::NotPrime(9));
        assert_eq!(Field::new(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(Field::new(3, 0).unwrap_err(), FieldError::ZeroDegree);
        assert!(matches!(Field::new(3, 11), Err(FieldError::TooLarge(_))));
        assert_eq!(Field::with_order(15).unwrap_err(), FieldError::NotPrimePower(15));
        assert_eq!(Field::with_order(8).unwrap_err(), FieldError::EvenCharacteristic);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.add(fe(2), fe(4)), fe(1));
        assert_eq!(f.inv(fe(2)).unwrap(), fe(3));
        assert_eq!(f.neg(fe(2)), fe(3));
        assert_eq!(f.inv(fe(0)).unwrap_err(), FieldError::DivisionByZero);
    }

    #[test]
    fn gf9_x_squared_is_minus_one() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.mul(fe(3), fe(3)), fe(2));
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(Field::new(5, 1).unwrap().primitive_root(), fe(2));
        assert_eq!(Field::new(3, 1).unwrap().primitive_root(), fe(2));
        assert_eq!(Field::new(3, 2).unwrap().primitive_root(), fe(4));
        for q in [7u64, 11, 13, 25, 27, 29, 49, 81, 125] {
            let f = Field::with_order(q).unwrap();
            let g = f.primitive_root();
            let n = q - 1;
            assert_eq!(f.pow(g, n), FieldElement::ONE);
            for r in prime_divisors(n) {
                assert_ne!(f.pow(g, n / r), FieldElement::ONE);
            }
        }
    }

    #[test]
    fn axioms_exhaustive_small() {
        for q in [3u64, 5, 7, 9] {
            let f = Field::with_order(q).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_is_an_involution() {
        for q in [3u64, 5, 9, 25, 27, 29, 243] {
            let f = Field::with_order(q).unwrap();
            for x in f.nonzero() {
                let y = f.inv(x).unwrap();
                assert_eq!(f.mul(x, y), FieldElement::ONE);
                assert_eq!(f.inv(y).unwrap(), x);
            }
        }
    }

    #[test]
    fn prime_power_splits() {
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
