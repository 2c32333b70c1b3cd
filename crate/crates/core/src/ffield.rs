//! Finite fields `F_q`, `q = p^s`, presented as `F_p[w]/(modulus)`.
//!
//! Elements are encoded as a single byte: the coefficient vector
//! `(c_0, .., c_{s-1})` in the generator `w` maps to `c_0 + c_1 p + .. + c_{s-1} p^{s-1}`.
//! All arithmetic goes through lookup tables built once per field, so only
//! fields with `q <= 256` are supported.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("elements belong to different fields")]
    Mismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("value {value} is not an element of F_{q}")]
    OutOfRange { value: u32, q: u32 },
}

struct FieldData {
    p: u32,
    s: u32,
    q: u32,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// A finite field `F_q`. Cheap to clone; all clones share the same tables.
#[derive(Clone)]
pub struct FieldSpec(Arc<FieldData>);

impl FieldSpec {
    /// Builds `F_{p^s}` using the lexicographically smallest monic irreducible
    /// of degree `s` over `F_p` (coefficients compared constant term first).
    pub fn new(p: u32, s: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if s == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(s).unwrap_or(u64::MAX);
        if q > MAX_ORDER as u64 {
            return Err(FieldError::TooLarge(q));
        }
        let q = q as u32;
        let modulus = if s == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, s as usize)
        };
        Ok(FieldSpec(Arc::new(build_tables(p, s, q, modulus))))
    }

    /// Resolves a prime power `q` into `(p, s)` and builds the field.
    pub fn from_q(q: u32) -> Result<Self, FieldError> {
        let (p, s) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        Self::new(p, s)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn s(&self) -> u32 {
        self.0.s
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.s == 1
    }

    /// Coefficients of the defining polynomial in `w`, constant term first.
    /// For a prime field this is the trivial modulus `w`.
    pub fn modulus(&self) -> &[u8] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            value: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            value: 1,
        }
    }

    /// The element with encoding `value`.
    pub fn element(&self, value: u32) -> Result<FieldElement, FieldError> {
        if value >= self.0.q {
            return Err(FieldError::OutOfRange { value, q: self.0.q });
        }
        Ok(FieldElement {
            spec: self.clone(),
            value: value as u8,
        })
    }

    /// The element `c_0 + c_1 w + ..` for residues `c_i` in `[0, p)`.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.0.s as usize {
            return Err(FieldError::OutOfRange {
                value: coeffs.len() as u32,
                q: self.0.q,
            });
        }
        let mut value = 0u32;
        for &c in coeffs.iter().rev() {
            if c >= self.0.p {
                return Err(FieldError::OutOfRange {
                    value: c,
                    q: self.0.q,
                });
            }
            value = value * self.0.p + c;
        }
        self.element(value)
    }

    /// The generator `w` (equal to `0` in a prime field).
    pub fn generator(&self) -> FieldElement {
        let value = if self.0.s == 1 { 0 } else { self.0.p as u8 };
        FieldElement {
            spec: self.clone(),
            value,
        }
    }

    /// All `q` elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |v| FieldElement {
            spec: self.clone(),
            value: v as u8,
        })
    }

    /// Residues `c_0, .., c_{s-1}` of an encoded element.
    pub fn digits(&self, a: u8) -> Vec<u32> {
        let mut v = a as u32;
        (0..self.0.s)
            .map(|_| {
                let d = v % self.0.p;
                v /= self.0.p;
                d
            })
            .collect()
    }

    // Encoded-element arithmetic. These are the hot paths of the polynomial
    // code; callers guarantee operands are `< q`.

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.0.add[a as usize * self.0.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.0.mul[a as usize * self.0.q as usize + b as usize]
    }

    /// Inverse of a nonzero element; `inv(0)` is `0`.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.0.inv[a as usize]
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^(1/p)`, the inverse of the absolute Frobenius.
    pub fn pth_root(&self, a: u8) -> u8 {
        self.pow(a, self.0.q as u64 / self.0.p as u64)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.s == other.0.s)
    }
}

impl Eq for FieldSpec {}

impl Hash for FieldSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.s.hash(state);
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

/// An element of a [`FieldSpec`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: FieldSpec,
    value: u8,
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// The byte encoding of this element.
    pub fn value(&self) -> u8 {
        self.value
    }

    /// Coefficients in the generator `w`, constant term first.
    pub fn coeffs(&self) -> Vec<u32> {
        self.spec.digits(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(FieldError::Mismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.spec.add(self.value, other.value)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.spec.sub(self.value, other.value)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.spec.mul(self.value, other.value)))
    }

    /// Multiplicative inverse, computed as `a^(q-2)`.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.value == 0 {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(self.spec.q() as u64 - 2))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.spec.pow(self.value, e))
    }

    fn with(&self, value: u8) -> Self {
        FieldElement {
            spec: self.spec.clone(),
            value,
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

macro_rules! impl_field_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$checked(&rhs).expect("field mismatch")
            }
        }

        impl<'a> $tr<&'a FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field mismatch")
            }
        }
    };
}

impl_field_op!(Add, add, try_add);
impl_field_op!(Sub, sub, try_sub);
impl_field_op!(Mul, mul, try_mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let v = self.spec.neg(self.value);
        self.with(v)
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
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

/// `(p, s)` with `p^s = q`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut s) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        s += 1;
    }
    (rest == 1).then_some((p, s))
}

// Small dense polynomials over F_p used only while constructing the field.

fn fp_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let s = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // modulus is monic
    for k in (s..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        for (j, &mj) in modulus.iter().enumerate() {
            let idx = k - s + j;
            prod[idx] = (prod[idx] + p * p - c * mj % p) % p;
        }
    }
    prod.truncate(s);
    prod.resize(s, 0);
    prod
}

fn fp_rem_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    // g monic
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        for (j, &gj) in g.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p * p - c * gj % p) % p;
        }
        r.pop();
    }
    r.iter().all(|&c| c == 0)
}

fn monic_of_degree(p: u32, d: usize, index: u64) -> Vec<u32> {
    let mut v = Vec::with_capacity(d + 1);
    let mut idx = index;
    for _ in 0..d {
        v.push((idx % p as u64) as u32);
        idx /= p as u64;
    }
    v.push(1);
    v
}

fn fp_is_irreducible(f: &[u32], p: u32) -> bool {
    let n = f.len() - 1;
    for d in 1..=n / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            if fp_rem_is_zero(f, &monic_of_degree(p, d, idx), p) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, s: usize) -> Vec<u8> {
    // Enumerate tails (c_0, .., c_{s-1}) with c_0 most significant.
    let count = (p as u64).pow(s as u32);
    for idx in 0..count {
        let mut tail = vec![0u32; s];
        let mut v = idx;
        for slot in tail.iter_mut().rev() {
            *slot = (v % p as u64) as u32;
            v /= p as u64;
        }
        tail.push(1);
        if fp_is_irreducible(&tail, p) {
            return tail.into_iter().map(|c| c as u8).collect();
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn build_tables(p: u32, s: u32, q: u32, modulus: Vec<u8>) -> FieldData {
    let qs = q as usize;
    let digits = |v: u32| -> Vec<u32> {
        let mut v = v;
        (0..s)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    };
    let encode = |d: &[u32]| -> u8 { d.iter().rev().fold(0u32, |acc, &c| acc * p + c) as u8 };
    let all: Vec<Vec<u32>> = (0..q).map(digits).collect();
    let modulus32: Vec<u32> = modulus.iter().map(|&c| c as u32).collect();

    let mut add = vec![0u8; qs * qs];
    let mut mul = vec![0u8; qs * qs];
    for a in 0..qs {
        for b in 0..qs {
            let sum: Vec<u32> = all[a]
                .iter()
                .zip(&all[b])
                .map(|(x, y)| (x + y) % p)
                .collect();
            add[a * qs + b] = encode(&sum);
            let prod = if s == 1 {
                vec![(all[a][0] * all[b][0]) % p]
            } else {
                fp_mulmod(&all[a], &all[b], &modulus32, p)
            };
            mul[a * qs + b] = encode(&prod);
        }
    }
    let mut neg = vec![0u8; qs];
    let mut inv = vec![0u8; qs];
    for a in 0..qs {
        neg[a] = (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u8;
        if a != 0 {
            inv[a] = (0..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as u8;
        }
    }
    FieldData {
        p,
        s,
        q,
        modulus,
        add,
        mul,
        neg,
        inv,
    }
}
