//! Irreducibility testing and factorization over `F_q`.
//!
//! Factorization runs squarefree decomposition, distinct-degree splitting and
//! equal-degree splitting (Cantor-Zassenhaus for odd `q`, the trace map for
//! even `q`). The random choices come from a ChaCha stream seeded by the
//! input's bytes, so repeated runs take identical paths.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ffield::FieldElement;

use super::modular::ResidueRing;
use super::{Poly, PolyError};

static SEED_SALT: AtomicU64 = AtomicU64::new(0);

/// Mixes `salt` into every factorization seed. Results are canonical and do
/// not depend on the seed; only the random splitting path does.
pub fn set_seed_salt(salt: u64) {
    SEED_SALT.store(salt, Ordering::Relaxed);
}

/// `unit * prod prime^exponent`, primes monic, distinct and canonically sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = &Poly> {
        self.factors.iter().map(|(p, _)| p)
    }

    /// Multiplies the factorization back out.
    pub fn product(&self) -> Poly {
        let f = self.unit.spec();
        self.factors
            .iter()
            .fold(Poly::constant(f, self.unit.value()), |acc, (p, e)| {
                &acc * &p.pow(*e as u64)
            })
    }

    pub fn exponent_of(&self, prime: &Poly) -> u32 {
        self.factors
            .iter()
            .find(|(p, _)| p == prime)
            .map_or(0, |(_, e)| *e)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            parts.push(self.unit.to_string());
        }
        for (p, e) in &self.factors {
            let base = p.to_string();
            let base = if p.coeffs().iter().filter(|&&c| c != 0).count() > 1 {
                format!("({base})")
            } else {
                base
            };
            parts.push(if *e > 1 { format!("{base}^{e}") } else { base });
        }
        write!(f, "{}", parts.join("*"))
    }
}

fn seed_for(f: &Poly) -> u64 {
    // FNV-1a over (p, s, coefficients).
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let field = f.field();
    let header = [field.p() as u8, field.s() as u8];
    for &b in header.iter().chain(f.coeffs()) {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h ^ SEED_SALT.load(Ordering::Relaxed)
}

/// Rabin's test: `f | T^(q^n) - T` and `gcd(T^(q^(n/l)) - T, f) = 1` for every
/// prime `l | n`.
pub fn is_irreducible(f: &Poly) -> Result<bool, PolyError> {
    let n = match f.degree() {
        None => return Err(PolyError::Zero),
        Some(0) => return Err(PolyError::Constant),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(true);
    }
    let f = f.monic();
    let field = f.field();
    let ring = ResidueRing::new(&f)?;
    let t = Poly::t(field);
    let divisors: Vec<usize> = prime_divisors(n).into_iter().map(|l| n / l).collect();
    let mut h = ring.reduce(&t);
    for k in 1..=n {
        h = ring.frobenius(&h);
        if divisors.contains(&k) && !(&h - &t).gcd(&f)?.is_one() {
            return Ok(false);
        }
    }
    Ok(h == ring.reduce(&t))
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
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

/// Squarefree decomposition of a monic polynomial: pairs `(g, i)` with the
/// `g` squarefree, pairwise coprime, and `f = prod g^i`.
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, u32)> {
    let field = f.field();
    let p = field.p();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fd = f.derivative();
    let mut c = f.gcd(&fd).expect("f is nonzero");
    let mut w = f.div_exact(&c).expect("gcd divides");
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c).expect("w is nonzero");
        let fac = w.div_exact(&y).expect("gcd divides");
        if !fac.is_one() {
            out.push((fac, i));
        }
        c = c.div_exact(&y).expect("gcd divides");
        w = y;
        i += 1;
    }
    if !c.is_one() {
        let root = c.pth_root();
        for (g, j) in squarefree_decomposition(&root) {
            out.push((g, j * p));
        }
    }
    out
}

/// Splits a monic squarefree polynomial into `(d, product of all its
/// irreducible factors of degree d)`.
pub fn distinct_degree(f: &Poly) -> Result<Vec<(usize, Poly)>, PolyError> {
    let mut out = Vec::new();
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Ok(out);
    }
    let field = f.field();
    let ring = ResidueRing::new(f)?;
    let t = Poly::t(field);
    let mut rest = f.clone();
    let mut h = ring.reduce(&t);
    let mut d = 0;
    while let Some(deg_rest) = rest.degree() {
        if deg_rest < 2 * (d + 1) {
            if deg_rest > 0 {
                out.push((deg_rest, rest.clone()));
            }
            break;
        }
        d += 1;
        h = ring.frobenius(&h);
        let g = (&h - &t).gcd(&rest)?;
        if !g.is_one() {
            rest = rest.div_exact(&g)?;
            out.push((d, g));
        }
    }
    Ok(out)
}

/// Splits a monic squarefree product of irreducibles all of degree `d`.
pub fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>, PolyError> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let field = f.field().clone();
    let ring = ResidueRing::new(f)?;
    let q = field.q() as u128;
    loop {
        let a = Poly::from_raw(
            &field,
            (0..n).map(|_| rng.gen_range(0..q as u32) as u8).collect(),
        );
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if q % 2 == 1 {
            // a^((q^d - 1)/2) = (a^(1 + q + .. + q^(d-1)))^((q - 1)/2)
            let mut norm = ring.reduce(&a);
            let mut conj = norm.clone();
            for _ in 1..d {
                conj = ring.frobenius(&conj);
                norm = ring.mul(&norm, &conj);
            }
            &ring.pow(&norm, (q - 1) / 2) - &Poly::one(&field)
        } else {
            // Absolute trace to F_2: sum of a^(2^i), i < d * log2(q).
            let k = field.s() as usize * d;
            let mut term = ring.reduce(&a);
            let mut trace = term.clone();
            for _ in 1..k {
                term = ring.mul(&term, &term);
                trace = &trace + &term;
            }
            trace
        };
        if b.is_zero() {
            continue;
        }
        let g = b.gcd(f)?;
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let mut parts = equal_degree(&g, d, rng)?;
            parts.extend(equal_degree(&f.div_exact(&g)?, d, rng)?);
            return Ok(parts);
        }
    }
}

/// Complete factorization into a unit times monic prime powers.
pub fn factorize(f: &Poly) -> Result<Factorization, PolyError> {
    if f.is_zero() {
        return Err(PolyError::Zero);
    }
    let unit = f.leading_element();
    let monic = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(&monic));
    let mut factors = Vec::new();
    for (g, mult) in squarefree_decomposition(&monic) {
        for (d, part) in distinct_degree(&g)? {
            for prime in equal_degree(&part, d, &mut rng)? {
                factors.push((prime, mult));
            }
        }
    }
    factors.sort();
    Ok(Factorization { unit, factors })
}
