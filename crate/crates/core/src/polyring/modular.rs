//! Arithmetic in the residue ring `A / fA` for a fixed nonzero modulus `f`.

use crate::ffield::FieldSpec;

use super::poly::{mul_slices, reduce_in_place};
use super::{Poly, PolyError};

/// Residue ring `A / fA` with a precomputed Frobenius matrix, so that the
/// `q`-th power map costs one matrix-vector product instead of a reduction
/// of a degree `q(n-1)` polynomial.
pub struct ResidueRing {
    modulus: Poly,
    /// Row `j` is `T^(qj) mod f`, padded to `n` coefficients.
    frob_rows: Vec<Vec<u8>>,
}

impl ResidueRing {
    pub fn new(modulus: &Poly) -> Result<Self, PolyError> {
        let n = match modulus.degree() {
            None => return Err(PolyError::DivisionByZero),
            Some(0) => return Err(PolyError::ConstantModulus),
            Some(n) => n,
        };
        let f = modulus.field();
        let t_q = Poly::monomial(f, 1, f.q() as usize).rem(modulus)?;
        let mut rows = Vec::with_capacity(n);
        let mut cur = Poly::one(f);
        for _ in 0..n {
            let mut row = cur.coeffs().to_vec();
            row.resize(n, 0);
            rows.push(row);
            cur = (&cur * &t_q).rem(modulus)?;
        }
        Ok(ResidueRing {
            modulus: modulus.clone(),
            frob_rows: rows,
        })
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    fn field(&self) -> &FieldSpec {
        self.modulus.field()
    }

    pub fn reduce(&self, a: &Poly) -> Poly {
        a.rem(&self.modulus).expect("modulus is nonzero")
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        let f = self.field();
        let mut prod = mul_slices(f, a.coeffs(), b.coeffs());
        reduce_in_place(f, &mut prod, self.modulus.coeffs());
        Poly::from_raw(f, prod)
    }

    pub fn pow(&self, a: &Poly, mut e: u128) -> Poly {
        let mut acc = self.reduce(&Poly::one(self.field()));
        let mut base = self.reduce(a);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a^q mod f` for `a` already reduced.
    pub fn frobenius(&self, a: &Poly) -> Poly {
        let f = self.field();
        let n = self.frob_rows.len();
        debug_assert!(a.coeffs().len() <= n);
        if f.is_prime_field() {
            let p = f.p() as u64;
            let mut acc = vec![0u64; n];
            for (j, &c) in a.coeffs().iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let c = c as u64;
                for (o, &r) in acc.iter_mut().zip(&self.frob_rows[j]) {
                    *o += c * r as u64;
                }
            }
            Poly::from_raw(f, acc.into_iter().map(|v| (v % p) as u8).collect())
        } else {
            let q = f.q() as u64;
            let mut acc = vec![0u8; n];
            for (j, &c) in a.coeffs().iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let cq = f.pow(c, q);
                for (o, &r) in acc.iter_mut().zip(&self.frob_rows[j]) {
                    *o = f.add(*o, f.mul(cq, r));
                }
            }
            Poly::from_raw(f, acc)
        }
    }

    /// `a^(q^k) mod f`.
    pub fn frobenius_iter(&self, a: &Poly, k: usize) -> Poly {
        (0..k).fold(self.reduce(a), |acc, _| self.frobenius(&acc))
    }
}
