//! The polynomial ring `A = F_q[T]`.

mod factor;
mod modular;
mod poly;

pub use factor::{
    distinct_degree, equal_degree, factorize, is_irreducible, set_seed_salt,
    squarefree_decomposition, Factorization,
};
pub use modular::ResidueRing;
pub use poly::{Poly, KARATSUBA_THRESHOLD};

use crate::ffield::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("gcd(0, 0) is undefined")]
    ZeroGcd,
    #[error("modulus must have positive degree")]
    ConstantModulus,
    #[error("input polynomial must be nonzero")]
    Zero,
    #[error("input polynomial must have positive degree")]
    Constant,
}

/// The `index`-th monic polynomial of degree `d`, with the constant term as
/// the least significant base-`q` digit of `index`.
pub fn monic_at(field: &FieldSpec, d: usize, mut index: u64) -> Poly {
    let q = field.q() as u64;
    let mut coeffs = Vec::with_capacity(d + 1);
    for _ in 0..d {
        coeffs.push((index % q) as u8);
        index /= q;
    }
    coeffs.push(1);
    Poly::from_raw(field, coeffs)
}

/// Number of monic polynomials of degree `d`.
pub fn monic_count(field: &FieldSpec, d: usize) -> u64 {
    (field.q() as u64).pow(d as u32)
}

/// All monic polynomials of degree exactly `d`, in canonical order.
pub fn enumerate_monic(field: &FieldSpec, d: usize) -> impl Iterator<Item = Poly> + '_ {
    (0..monic_count(field, d)).map(move |i| monic_at(field, d, i))
}

pub fn enumerate_monic_irreducible(field: &FieldSpec, d: usize) -> impl Iterator<Item = Poly> + '_ {
    assert!(d >= 1, "irreducibles have positive degree");
    enumerate_monic(field, d).filter(|f| is_irreducible(f).expect("positive degree"))
}

/// Monic polynomials of degree at most `d`, in canonical order.
pub fn enumerate_monic_up_to(field: &FieldSpec, d: usize) -> impl Iterator<Item = Poly> + '_ {
    (0..=d).flat_map(move |e| enumerate_monic(field, e))
}

/// `Phi(m)`: the number of nonzero polynomials of degree below `deg m`
/// coprime to `m`. Units give 1.
pub fn euler_phi(m: &Poly) -> Result<u64, PolyError> {
    let fac = factorize(m)?;
    Ok(phi_from_factorization(&fac))
}

pub fn phi_from_factorization(fac: &Factorization) -> u64 {
    let q = fac.unit.spec().q() as u64;
    fac.factors
        .iter()
        .map(|(p, e)| {
            let d = p.degree().expect("prime") as u32;
            q.pow(d * e) - q.pow(d * (e - 1))
        })
        .product()
}

/// All monic divisors, canonically sorted.
pub fn monic_divisors(m: &Poly) -> Result<Vec<Poly>, PolyError> {
    Ok(divisors_from_factorization(&factorize(m)?))
}

pub fn divisors_from_factorization(fac: &Factorization) -> Vec<Poly> {
    let field = fac.unit.spec();
    let mut divs = vec![Poly::one(field)];
    for (p, e) in &fac.factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..*e {
                cur = &cur * p;
                next.push(cur.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}
