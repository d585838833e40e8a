//! Arithmetic in GF(p^deg).
//!
//! Elements are encoded as integers: the polynomial `c_0 + c_1 x + ... `
//! over GF(p) is stored as `c_0 + c_1 p + c_2 p^2 + ...`. Multiplication and
//! inversion go through discrete log / antilog tables built once per field;
//! addition works digit-wise (XOR in characteristic 2).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// An element of a [`GaloisField`], identified by its integer code.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn code(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    deg: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for `i` in `0..2(q-1)`, so sums of two logs need no reduction.
    exp: Vec<u32>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
}

/// A finite field GF(p^deg) with a fixed irreducible modulus.
///
/// Cheap to clone: the lookup tables are shared.
#[derive(Clone)]
pub struct GaloisField {
    t: Arc<Tables>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("p", &self.t.p)
            .field("deg", &self.t.deg)
            .field("modulus", &self.t.modulus)
            .finish()
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.t.p == other.t.p && self.t.modulus == other.t.modulus
    }
}

impl Eq for GaloisField {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q` into `(p, deg)`.
pub fn factor_prime_power(q: u32) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q >= 2 has a divisor");
    let (mut rest, mut deg) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        deg += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p, deg))
}

fn checked_order(p: u32, deg: u32) -> Result<u32> {
    let mut q: u64 = 1;
    for _ in 0..deg {
        q *= u64::from(p);
        if q > u64::from(MAX_ORDER) {
            return Err(Error::FieldTooLarge { p, deg });
        }
    }
    Ok(q as u32)
}

// Dense polynomials over GF(p), constant term first, no trailing zeros.

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        for (i, &bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = (r[idx] + p - c * bc % p) % p;
        }
        r = trim(r);
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let (mut base, mut e) = (u64::from(a), p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % u64::from(p);
        }
        base = base * base % u64::from(p);
        e >>= 1;
    }
    r as u32
}

fn digits(mut n: u32, p: u32, len: usize) -> Vec<u32> {
    let mut v = Vec::with_capacity(len);
    for _ in 0..len {
        v.push(n % p);
        n /= p;
    }
    v
}

/// Trial division against every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m = trim(modulus.to_vec());
    if m.len() < 2 {
        return false;
    }
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as usize).pow(d as u32);
        for n in 0..count {
            let mut divisor = digits(n as u32, p, d);
            divisor.push(1);
            if poly_rem(&m, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible polynomial of degree `deg`,
/// comparing the non-leading coefficients with the constant term last.
fn least_irreducible(p: u32, deg: u32) -> Vec<u32> {
    if deg == 1 {
        return vec![0, 1];
    }
    let count = p.pow(deg);
    (0..count)
        .map(|n| {
            let mut m = digits(n, p, deg as usize);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(m, p))
        .expect("an irreducible polynomial exists in every degree")
}

fn mul_reduce(a: u32, b: u32, p: u32, modulus: &[u32]) -> u32 {
    let deg = modulus.len() - 1;
    let (da, db) = (digits(a, p, deg), digits(b, p, deg));
    let mut prod = vec![0u32; 2 * deg];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let r = poly_rem(&prod, modulus, p);
    r.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl GaloisField {
    /// GF(p^deg) with the lexicographically least irreducible modulus.
    pub fn new(p: u32, deg: u32) -> Result<Self> {
        Self::validate(p, deg)?;
        let modulus = least_irreducible(p, deg);
        Ok(Self::build(p, deg, modulus))
    }

    /// GF(q) for a prime power `q`.
    pub fn of_order(q: u32) -> Result<Self> {
        let (p, deg) = factor_prime_power(q)?;
        Self::new(p, deg)
    }

    /// GF(p^deg) with an explicit monic modulus (constant term first).
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Self> {
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus);
        }
        let deg = (modulus.len() - 1) as u32;
        Self::validate(p, deg)?;
        if !is_irreducible(modulus, p) {
            return Err(Error::BadModulus);
        }
        Ok(Self::build(p, deg, modulus.to_vec()))
    }

    fn validate(p: u32, deg: u32) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if deg < 1 {
            return Err(Error::InvalidDegree);
        }
        checked_order(p, deg).map(|_| ())
    }

    fn build(p: u32, deg: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(deg);
        let n = (q - 1) as usize;
        let mul = |a, b| {
            if deg == 1 {
                a * b % p
            } else {
                mul_reduce(a, b, p, &modulus)
            }
        };
        // Smallest element of multiplicative order q - 1.
        let mut powers = Vec::with_capacity(n);
        for g in 1..q {
            powers.clear();
            let mut x = 1u32;
            loop {
                powers.push(x);
                x = mul(x, g);
                if x == 1 {
                    break;
                }
            }
            if powers.len() == n {
                break;
            }
        }
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; q as usize];
        for (i, &x) in powers.iter().enumerate() {
            exp[i] = x;
            exp[i + n] = x;
            log[x as usize] = i as u32;
        }
        GaloisField {
            t: Arc::new(Tables {
                p,
                deg,
                q,
                modulus,
                exp,
                log,
            }),
        }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.t.p
    }

    #[inline]
    pub fn deg(&self) -> u32 {
        self.t.deg
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.t.q
    }

    /// Modulus coefficients, constant term first, including the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    /// The element with code `code`. Panics if `code >= q`.
    #[inline]
    pub fn element(&self, code: u32) -> FieldElement {
        assert!(code < self.t.q, "code {code} out of range for GF({})", self.t.q);
        FieldElement(code)
    }

    pub fn try_element(&self, code: u32) -> Result<FieldElement> {
        if code < self.t.q {
            Ok(FieldElement(code))
        } else {
            Err(Error::Malformed(format!("field code {code} out of range for GF({})", self.t.q)))
        }
    }

    /// All elements, codes `0..q` in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.t.q).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.t.q).map(FieldElement)
    }

    /// Generator of the multiplicative group used by the log tables.
    pub fn primitive_element(&self) -> FieldElement {
        FieldElement(self.t.exp[1 % self.t.exp.len()])
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let t = &*self.t;
        if t.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if t.deg == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= t.p { s - t.p } else { s });
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
        while x > 0 || y > 0 {
            let d = (x % t.p + y % t.p) % t.p;
            out += d * place;
            place *= t.p;
            x /= t.p;
            y /= t.p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let t = &*self.t;
        if t.p == 2 {
            return a;
        }
        if t.deg == 1 {
            return FieldElement(if a.0 == 0 { 0 } else { t.p - a.0 });
        }
        let (mut x, mut out, mut place) = (a.0, 0, 1);
        while x > 0 {
            out += ((t.p - x % t.p) % t.p) * place;
            place *= t.p;
            x /= t.p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let t = &*self.t;
        FieldElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let t = &*self.t;
        let n = t.q - 1;
        Ok(FieldElement(t.exp[((n - t.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        let t = &*self.t;
        let n = u64::from(t.q - 1);
        let l = u64::from(t.log[a.0 as usize]) * (e % n) % n;
        FieldElement(t.exp[l as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElement) -> Result<u32> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.t.q - 1;
        let l = self.t.log[a.0 as usize];
        Ok(n / gcd(n, l))
    }

    /// Sum of a slice of elements.
    pub fn sum<I: IntoIterator<Item = FieldElement>>(&self, items: I) -> FieldElement {
        items.into_iter().fold(FieldElement::ZERO, |acc, x| self.add(acc, x))
    }

    pub fn dot(&self, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
        a.iter()
            .zip(b)
            .fold(FieldElement::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
