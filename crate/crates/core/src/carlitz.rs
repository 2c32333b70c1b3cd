//! The Carlitz module `C : A -> A{tau}`, `C_T = T + tau`.
//!
//! `C_m(x) = sum_i [m, i] x^(q^i)` is `F_q`-linear in `x`, so it is stored as
//! the coefficient list `[m, 0], .., [m, deg m]`.

use crate::error::{Error, Result};
use crate::polyring::Poly;

/// Coefficients of `C_m(x)`; entry `i` multiplies `x^(q^i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarlitzCoeffs {
    m: Poly,
    coeffs: Vec<Poly>,
}

impl CarlitzCoeffs {
    pub fn m(&self) -> &Poly {
        &self.m
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// `[m, i]`, zero past the end.
    pub fn get(&self, i: usize) -> Poly {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.m.field()))
    }
}

/// `C_{T^k}` for `k = 0..=d`, from `C_{T a} = T C_a + (C_a)^q` coefficient-wise.
fn power_basis(m: &Poly, d: usize) -> Vec<Vec<Poly>> {
    let f = m.field();
    let t = Poly::t(f);
    let mut basis: Vec<Vec<Poly>> = vec![vec![Poly::one(f)]];
    for k in 0..d {
        let prev = &basis[k];
        let next: Vec<Poly> = (0..=k + 1)
            .map(|i| {
                let lin = prev.get(i).map_or_else(|| Poly::zero(f), |c| &t * c);
                match i.checked_sub(1) {
                    Some(j) => &lin + &prev[j].frobenius(),
                    None => lin,
                }
            })
            .collect();
        basis.push(next);
    }
    basis
}

pub fn carlitz_coeffs(m: &Poly) -> Result<CarlitzCoeffs> {
    let d = m.degree().ok_or(Error::Zero("m"))?;
    let f = m.field();
    let basis = power_basis(m, d);
    let mut coeffs = vec![Poly::zero(f); d + 1];
    for (k, row) in basis.iter().enumerate() {
        let c = m.coeff(k);
        if c == 0 {
            continue;
        }
        for (acc, b) in coeffs.iter_mut().zip(row) {
            *acc = &*acc + &b.scale(c);
        }
    }
    Ok(CarlitzCoeffs {
        m: m.clone(),
        coeffs,
    })
}

/// Exact value `C_m(u)`; zero when `m` or `u` is zero.
pub fn carlitz_eval(m: &Poly, u: &Poly) -> Poly {
    m.assert_same_field(u);
    if m.is_zero() || u.is_zero() {
        return Poly::zero(m.field());
    }
    let cc = carlitz_coeffs(m).expect("m is nonzero");
    let mut acc = Poly::zero(m.field());
    let mut power = u.clone();
    for (i, c) in cc.coeffs.iter().enumerate() {
        if i > 0 {
            power = power.frobenius();
        }
        if !c.is_zero() {
            acc = &acc + &(c * &power);
        }
    }
    acc
}

/// The residues `C_{T^i}(u) mod M`, from which `C_n(u) mod M` is an
/// `F_q`-linear combination.
#[derive(Clone, Debug)]
pub struct CarlitzOrbit {
    modulus: Poly,
    values: Vec<Poly>,
}

impl CarlitzOrbit {
    /// Prepares evaluation of `C_n(u) mod modulus` for `deg n <= max_deg`.
    pub fn new(u: &Poly, modulus: &Poly, max_deg: usize) -> Result<Self> {
        match modulus.degree() {
            None => return Err(Error::Zero("modulus")),
            Some(0) => return Err(Error::Constant("modulus")),
            Some(_) => {}
        }
        u.assert_same_field(modulus);
        let t = Poly::t(modulus.field());
        let mut v = u.rem(modulus)?;
        let mut values = Vec::with_capacity(max_deg + 1);
        values.push(v.clone());
        for _ in 0..max_deg {
            v = (&(&t * &v) + &v.frobenius()).rem(modulus)?;
            values.push(v.clone());
        }
        Ok(CarlitzOrbit {
            modulus: modulus.clone(),
            values,
        })
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn max_deg(&self) -> usize {
        self.values.len() - 1
    }

    /// `C_n(u) mod modulus`.
    ///
    /// # Panics
    /// If `deg n` exceeds the prepared range.
    pub fn eval(&self, n: &Poly) -> Poly {
        let f = self.modulus.field();
        assert!(
            n.coeffs().len() <= self.values.len(),
            "degree beyond prepared orbit"
        );
        let mut acc = Poly::zero(f);
        for (&c, v) in n.coeffs().iter().zip(&self.values) {
            if c != 0 {
                acc = &acc + &v.scale(c);
            }
        }
        acc
    }

    pub fn annihilates(&self, n: &Poly) -> bool {
        self.eval(n).is_zero()
    }
}

/// `C_m(u) mod modulus` without expanding `C_m(u)`.
pub fn carlitz_eval_mod(m: &Poly, u: &Poly, modulus: &Poly) -> Result<Poly> {
    let orbit = CarlitzOrbit::new(u, modulus, m.degree().unwrap_or(0))?;
    Ok(orbit.eval(m))
}
