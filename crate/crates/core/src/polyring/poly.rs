use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ffield::{FieldElement, FieldSpec};

use super::PolyError;

/// Operand length below which multiplication is schoolbook.
pub const KARATSUBA_THRESHOLD: usize = 32;

/// An element of `A = F_q[T]`, stored densely with the constant term first and
/// no trailing zeros. The zero polynomial has an empty coefficient vector and
/// degree `None` (standing in for `-inf`).
#[derive(Clone)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<u8>,
}

impl Poly {
    /// Builds a polynomial from encoded coefficients, constant term first.
    ///
    /// # Panics
    /// If a coefficient is not an element of the field.
    pub fn new(field: &FieldSpec, mut coeffs: Vec<u8>) -> Self {
        assert!(
            coeffs.iter().all(|&c| (c as u32) < field.q()),
            "coefficient outside F_{}",
            field.q()
        );
        trim(&mut coeffs);
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub(crate) fn from_raw(field: &FieldSpec, mut coeffs: Vec<u8>) -> Self {
        trim(&mut coeffs);
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_elements(field: &FieldSpec, coeffs: &[FieldElement]) -> Self {
        assert!(coeffs.iter().all(|c| c.spec() == field), "field mismatch");
        Self::from_raw(field, coeffs.iter().map(FieldElement::value).collect())
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: &FieldSpec, c: u8) -> Self {
        Self::new(field, vec![c])
    }

    /// The indeterminate `T`.
    pub fn t(field: &FieldSpec) -> Self {
        Self::monomial(field, 1, 1)
    }

    /// `c * T^k`.
    pub fn monomial(field: &FieldSpec, c: u8, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u8> {
        self.coeffs
    }

    /// Coefficient of `T^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Leading coefficient, `0` for the zero polynomial.
    pub fn leading_coeff(&self) -> u8 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn leading_element(&self) -> FieldElement {
        self.field
            .element(self.leading_coeff() as u32)
            .expect("in range")
    }

    /// The monic associate; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            0 | 1 => self.clone(),
            lc => self.scale(self.field.inv(lc)),
        }
    }

    pub fn scale(&self, c: u8) -> Poly {
        if c == 0 {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        Poly::from_raw(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplication by `T^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn eval(&self, x: u8) -> u8 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let p = f.p() as usize;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| {
                // i * c as repeated addition; i is reduced mod p first.
                (0..i % p).fold(0u8, |acc, _| f.add(acc, c))
            })
            .collect();
        Poly::from_raw(f, coeffs)
    }

    /// The `q`-th power, computed as the semilinear map
    /// `sum c_i T^i -> sum c_i^q T^(iq)`. Over `F_q`, `c^q = c`.
    pub fn frobenius(&self) -> Poly {
        let q = self.field.q() as usize;
        if self.coeffs.len() <= 1 {
            return self.clone();
        }
        let mut coeffs = vec![0u8; (self.coeffs.len() - 1) * q + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * q] = c;
        }
        Poly {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// For a polynomial in `T^p` only, the unique `g` with `g^p = self`.
    pub(crate) fn pth_root(&self) -> Poly {
        let f = &self.field;
        let p = f.p() as usize;
        debug_assert!(self
            .coeffs
            .iter()
            .enumerate()
            .all(|(i, &c)| i % p == 0 || c == 0));
        let coeffs = self
            .coeffs
            .iter()
            .step_by(p)
            .map(|&c| f.pth_root(c))
            .collect();
        Poly::from_raw(f, coeffs)
    }

    pub fn square(&self) -> Poly {
        self * self
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Euclidean division: `self = quotient * divisor + remainder` with
    /// `deg remainder < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.assert_same_field(divisor);
        let db = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let f = &self.field;
        if self.coeffs.len() <= db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv_lc = f.inv(divisor.leading_coeff());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u8; rem.len() - db];
        let b = &divisor.coeffs;
        for k in (db..rem.len()).rev() {
            let c = rem[k];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, inv_lc);
            quot[k - db] = factor;
            let base = k - db;
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    rem[base + j] = f.sub(rem[base + j], f.mul(factor, bj));
                }
            }
        }
        rem.truncate(db);
        Ok((Poly::from_raw(f, quot), Poly::from_raw(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        self.assert_same_field(divisor);
        let db = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        if self.coeffs.len() <= db {
            return Ok(self.clone());
        }
        let f = &self.field;
        let mut rem = self.coeffs.clone();
        reduce_in_place(f, &mut rem, &divisor.coeffs);
        Ok(Poly::from_raw(f, rem))
    }

    /// Quotient of an exact division.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        let (q, r) = self.divmod(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible)
        }
    }

    /// True if `self` divides `other`. Zero divides only zero.
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.assert_same_field(other);
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::ZeroGcd);
        }
        let f = &self.field;
        let (mut a, mut b) = (self.coeffs.clone(), other.coeffs.clone());
        while !b.is_empty() {
            reduce_in_place(f, &mut a, &b);
            trim(&mut a);
            std::mem::swap(&mut a, &mut b);
        }
        Ok(Poly::from_raw(f, a).monic())
    }

    pub(crate) fn assert_same_field(&self, other: &Poly) {
        assert!(
            self.field == other.field,
            "polynomials over different fields"
        );
    }

    /// Position of a monic polynomial in the enumeration of monic polynomials
    /// of its degree (constant term varying fastest).
    pub fn monic_index(&self) -> u64 {
        let q = self.field.q() as u64;
        self.coeffs[..self.coeffs.len().saturating_sub(1)]
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * q + c as u64)
    }
}

fn trim(v: &mut Vec<u8>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Reduces `a` modulo the nonzero polynomial `b` in place; `a` is truncated
/// to `deg b` entries (not trimmed).
pub(crate) fn reduce_in_place(f: &FieldSpec, a: &mut Vec<u8>, b: &[u8]) {
    let db = b.len() - 1;
    if a.len() <= db {
        return;
    }
    let inv_lc = f.inv(b[db]);
    for k in (db..a.len()).rev() {
        let c = a[k];
        if c == 0 {
            continue;
        }
        let factor = f.mul(c, inv_lc);
        let base = k - db;
        for (j, &bj) in b[..db].iter().enumerate() {
            if bj != 0 {
                a[base + j] = f.sub(a[base + j], f.mul(factor, bj));
            }
        }
    }
    a.truncate(db);
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.coeffs.hash(state);
    }
}

/// Canonical order: by degree (zero first), then by coefficients from the
/// top down. For monic polynomials of one degree this is enumeration order.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

fn add_slices(f: &FieldSpec, a: &[u8], b: &[u8]) -> Vec<u8> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o = f.add(*o, s);
    }
    out
}

fn sub_into(f: &FieldSpec, acc: &mut Vec<u8>, b: &[u8]) {
    if acc.len() < b.len() {
        acc.resize(b.len(), 0);
    }
    for (o, &s) in acc.iter_mut().zip(b) {
        *o = f.sub(*o, s);
    }
}

fn add_into_at(f: &FieldSpec, acc: &mut [u8], b: &[u8], offset: usize) {
    for (o, &s) in acc[offset..].iter_mut().zip(b) {
        *o = f.add(*o, s);
    }
}

fn schoolbook(f: &FieldSpec, a: &[u8], b: &[u8]) -> Vec<u8> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let n = a.len() + b.len() - 1;
    if f.is_prime_field() {
        let p = f.p();
        let mut acc = vec![0u32; n];
        // (p-1)^2 * min(len) stays far below u32::MAX for p < 256 and
        // operands shorter than KARATSUBA_THRESHOLD; reduce periodically anyway.
        let reduce_every = (u32::MAX / ((p - 1) * (p - 1)).max(1)) as usize - 1;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = x as u32;
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] += x * y as u32;
            }
            if (i + 1) % reduce_every == 0 {
                acc.iter_mut().for_each(|v| *v %= p);
            }
        }
        acc.into_iter().map(|v| (v % p) as u8).collect()
    } else {
        let mut out = vec![0u8; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        out
    }
}

pub(crate) fn mul_slices(f: &FieldSpec, a: &[u8], b: &[u8]) -> Vec<u8> {
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if b.len() < KARATSUBA_THRESHOLD {
        return schoolbook(f, a, b);
    }
    if a.len() >= 2 * b.len() {
        // Unbalanced: split the long operand into chunks of the short length.
        let mut out = vec![0u8; a.len() + b.len() - 1];
        for (k, chunk) in a.chunks(b.len()).enumerate() {
            let part = mul_slices(f, chunk, b);
            add_into_at(f, &mut out, &part, k * b.len());
        }
        return out;
    }
    let h = a.len() / 2;
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h.min(b.len()));
    let z0 = mul_slices(f, a0, b0);
    let z2 = mul_slices(f, a1, b1);
    let mut z1 = mul_slices(f, &add_slices(f, a0, a1), &add_slices(f, b0, b1));
    sub_into(f, &mut z1, &z0);
    sub_into(f, &mut z1, &z2);
    let mut out = vec![0u8; a.len() + b.len() - 1];
    add_into_at(f, &mut out, &z0, 0);
    let z1_len = z1.len().min(out.len() - h);
    add_into_at(f, &mut out, &z1[..z1_len], h);
    add_into_at(f, &mut out, &z2, 2 * h);
    out
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.assert_same_field(rhs);
        Poly::from_raw(
            &self.field,
            add_slices(&self.field, &self.coeffs, &rhs.coeffs),
        )
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.assert_same_field(rhs);
        let mut out = self.coeffs.clone();
        sub_into(&self.field, &mut out, &rhs.coeffs);
        Poly::from_raw(&self.field, out)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.assert_same_field(rhs);
        Poly::from_raw(
            &self.field,
            mul_slices(&self.field, &self.coeffs, &rhs.coeffs),
        )
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::from_raw(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &'a Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
