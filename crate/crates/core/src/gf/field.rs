//! Finite fields GF(p^m) with q = p^m ≤ 256.
//!
//! Elements are encoded as integers in `[0, q)` whose base-p digits are the
//! coefficients of a polynomial over GF(p), constant term in the lowest digit.
//! The modulus for each `(p, m)` comes from a fixed table so that encodings are
//! stable across runs and files. Multiplication and inversion go through
//! discrete-log tables built once per field.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: usize = 256;

/// Monic irreducible moduli, coefficients listed from the constant term up.
const MODULI: &[(u32, u32, &[u8])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (5, 2, &[2, 0, 1]),
    (5, 3, &[1, 1, 0, 1]),
    (7, 2, &[1, 0, 1]),
    (11, 2, &[1, 0, 1]),
    (13, 2, &[2, 0, 1]),
];

/// A field element, stored as its code.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub u8);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A Frobenius power `a ↦ a^(p^e)`. These are all the automorphisms of GF(p^m).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    exp: u8,
    degree: u8,
}

impl Automorphism {
    pub fn exponent(self) -> u32 {
        self.exp as u32
    }

    pub fn is_identity(self) -> bool {
        self.exp == 0
    }

    /// `self ∘ other`.
    pub fn compose(self, other: Automorphism) -> Automorphism {
        debug_assert_eq!(self.degree, other.degree);
        Automorphism {
            exp: ((self.exp as u32 + other.exp as u32) % self.degree as u32) as u8,
            degree: self.degree,
        }
    }

    pub fn inverse(self) -> Automorphism {
        Automorphism {
            exp: ((self.degree - self.exp) % self.degree),
            degree: self.degree,
        }
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "id")
        } else {
            write!(f, "frob^{}", self.exp)
        }
    }
}

struct Tables {
    p: u32,
    m: u32,
    q: usize,
    modulus: Vec<u8>,
    add: Vec<u8>,
    neg: Vec<u8>,
    // exp is doubled in length so log sums need no reduction.
    exp: Vec<u8>,
    log: Vec<u16>,
    frob: Vec<Vec<u8>>,
}

/// A finite field. Cloning is cheap; the tables are shared.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.m == other.0.m)
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order().hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn to_digits(code: usize, p: u32, m: u32) -> Vec<u32> {
    let mut c = code as u32;
    (0..m)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

fn from_digits(digits: &[u32], p: u32) -> usize {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d) as usize
}

/// Remainder of `a` modulo the monic polynomial `b` over GF(p); coefficients low first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - lead * bc % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Irreducibility by trial division by every monic polynomial of degree ≤ m/2.
pub fn is_irreducible(modulus: &[u8], p: u32) -> bool {
    let m = modulus.len() - 1;
    let f: Vec<u32> = modulus.iter().map(|&c| c as u32).collect();
    if m <= 1 {
        return m == 1;
    }
    for d in 1..=m / 2 {
        for low in 0..p.pow(d as u32) as usize {
            let mut g = to_digits(low, p, d as u32);
            g.push(1);
            if poly_rem(&f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_mul_mod(a: usize, b: usize, p: u32, m: u32, modulus: &[u32]) -> usize {
    let da = to_digits(a, p, m);
    let db = to_digits(b, p, m);
    let mut prod = vec![0u32; 2 * m as usize - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = if m == 1 { prod } else { poly_rem(&prod, modulus, p) };
    r.resize(m as usize, 0);
    from_digits(&r, p)
}

impl Field {
    /// Builds GF(p^m) from the built-in modulus table.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::UnsupportedField { p, m });
        }
        let q = (p as usize)
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::UnsupportedField { p, m })?;
        let modulus: Vec<u8> = if m == 1 {
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|(pp, mm, _)| *pp == p && *mm == m)
                .map(|(_, _, c)| c.to_vec())
                .ok_or(Error::UnsupportedField { p, m })?
        };
        if !is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus(modulus));
        }
        let modulus_u32: Vec<u32> = modulus.iter().map(|&c| c as u32).collect();

        let mut add = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        for a in 0..q {
            let da = to_digits(a, p, m);
            let na: Vec<u32> = da.iter().map(|&d| (p - d) % p).collect();
            neg[a] = from_digits(&na, p) as u8;
            for b in 0..q {
                let db = to_digits(b, p, m);
                let s: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add[a * q + b] = from_digits(&s, p) as u8;
            }
        }

        // Smallest primitive element by code.
        let order = q - 1;
        let mut exp = vec![0u8; 2 * order.max(1)];
        let mut log = vec![0u16; q];
        let generator = (1..q)
            .find(|&g| {
                let mut x = 1usize;
                for i in 1..=order {
                    x = poly_mul_mod(x, g, p, m, &modulus_u32);
                    if x == 1 {
                        return i == order;
                    }
                }
                false
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut x = 1usize;
        for i in 0..order {
            exp[i] = x as u8;
            exp[i + order] = x as u8;
            log[x] = i as u16;
            x = poly_mul_mod(x, generator, p, m, &modulus_u32);
        }

        let mut frob = Vec::with_capacity(m as usize);
        for e in 0..m {
            let pe = (p as usize).pow(e) % order.max(1);
            let table: Vec<u8> = (0..q)
                .map(|a| {
                    if a == 0 {
                        0
                    } else {
                        exp[(log[a] as usize * pe) % order]
                    }
                })
                .collect();
            frob.push(table);
        }

        Ok(Field(Arc::new(Tables {
            p,
            m,
            q,
            modulus,
            add,
            neg,
            exp,
            log,
            frob,
        })))
    }

    /// Builds the field of order `q`, which must be a prime power.
    pub fn with_order(q: u32) -> Result<Field> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
        let mut rest = q;
        let mut m = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            m += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrimePower(q));
        }
        Field::new(p, m)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn order(&self) -> usize {
        self.0.q
    }

    /// Modulus coefficients from the constant term up.
    pub fn modulus(&self) -> &[u8] {
        &self.0.modulus
    }

    pub fn is_gf2(&self) -> bool {
        self.0.q == 2
    }

    pub fn elem(&self, code: u32) -> Result<Elem> {
        if (code as usize) < self.0.q {
            Ok(Elem(code as u8))
        } else {
            Err(Error::InvalidElement { code, q: self.0.q })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(|c| Elem(c as u8))
    }

    /// The primitive element used to build the log tables.
    pub fn generator(&self) -> Elem {
        Elem(self.0.exp[if self.0.q == 2 { 0 } else { 1 }])
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.0.add[a.0 as usize * self.0.q + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let t = &self.0;
        Elem(t.exp[t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(self.inv_nonzero(a))
        }
    }

    #[inline]
    pub(crate) fn inv_nonzero(&self, a: Elem) -> Elem {
        debug_assert!(!a.is_zero());
        let t = &self.0;
        let order = t.q - 1;
        Elem(t.exp[(order - t.log[a.0 as usize] as usize) % order])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let t = &self.0;
        let order = (t.q - 1) as u64;
        Elem(t.exp[((t.log[a.0 as usize] as u64 * (e % order)) % order) as usize])
    }

    /// The Frobenius power `a ↦ a^(p^e)`, with `e` taken modulo m.
    pub fn automorphism(&self, e: u32) -> Automorphism {
        Automorphism {
            exp: (e % self.0.m) as u8,
            degree: self.0.m as u8,
        }
    }

    pub fn identity_automorphism(&self) -> Automorphism {
        self.automorphism(0)
    }

    /// All automorphisms, identity first.
    pub fn automorphisms(&self) -> impl Iterator<Item = Automorphism> + '_ {
        (0..self.0.m).map(|e| self.automorphism(e))
    }

    #[inline]
    pub fn apply(&self, sigma: Automorphism, a: Elem) -> Elem {
        Elem(self.0.frob[sigma.exp as usize][a.0 as usize])
    }

    pub fn apply_slice(&self, sigma: Automorphism, v: &[Elem]) -> Vec<Elem> {
        if sigma.is_identity() {
            return v.to_vec();
        }
        v.iter().map(|&a| self.apply(sigma, a)).collect()
    }

    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter()
            .zip(b)
            .fold(Elem::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}
