//! Carlitz annihilators and (large) Zsigmondy primes.
//!
//! The annihilator `P_{u,p}` plays the role of the multiplicative order of `u`
//! modulo `p`: `C_n(u) = 0 mod p` exactly when `P_{u,p}` divides `n`, and
//! `P_{u,p}` divides `p - 1`.

use std::fmt;

use serde::Serialize;

use crate::carlitz::CarlitzOrbit;
use crate::cyclotomic::cyclotomic_eval;
use crate::error::{Error, Result};
use crate::polyring::{factorize, is_irreducible, Factorization, Poly};

/// Monic representatives `(u0, m0)` with `u = d*u0`, `m = e*m0`.
pub fn normalize_pair(u: &Poly, m: &Poly) -> Result<(Poly, Poly)> {
    if u.is_zero() {
        return Err(Error::Zero("u"));
    }
    if m.is_zero() {
        return Err(Error::Zero("m"));
    }
    u.assert_same_field(m);
    Ok((u.monic(), m.monic()))
}

fn check_prime(prime: &Poly) -> Result<()> {
    if prime.degree().unwrap_or(0) == 0 || !prime.is_monic() || !is_irreducible(prime)? {
        return Err(Error::NotIrreducible(prime.to_string()));
    }
    Ok(())
}

fn check_q(field_q: u32) -> Result<()> {
    if field_q == 2 {
        Err(Error::QTooSmall)
    } else {
        Ok(())
    }
}

/// Strips primes from `n` while `C_{n/r}(u)` stays divisible by the orbit's
/// modulus; `n` must be annihilating and `fac` its factorization.
fn order_from(orbit: &CarlitzOrbit, fac: &Factorization) -> Poly {
    let mut n = fac.product();
    for (r, e) in &fac.factors {
        for _ in 0..*e {
            let candidate = n.div_exact(r).expect("r divides n");
            if orbit.annihilates(&candidate) {
                n = candidate;
            } else {
                break;
            }
        }
    }
    n
}

/// `P_{u,p}`: 1 when `p | u`, otherwise the monic `P` of least positive degree
/// with `C_P(u) = 0 mod p`.
pub fn carlitz_annihilator(u: &Poly, prime: &Poly) -> Result<Poly> {
    if u.is_zero() {
        return Err(Error::Zero("u"));
    }
    check_prime(prime)?;
    annihilator_of_prime(u, prime)
}

/// [`carlitz_annihilator`] for a prime already known to be monic irreducible.
fn annihilator_of_prime(u: &Poly, prime: &Poly) -> Result<Poly> {
    let f = prime.field();
    if prime.divides(u) {
        return Ok(Poly::one(f));
    }
    let n = prime - &Poly::one(f);
    let orbit = CarlitzOrbit::new(u, prime, n.degree().expect("deg p >= 1"))?;
    Ok(order_from(&orbit, &factorize(&n)?))
}

/// Whether `P_{u,p} = m`, decided as "`C_m(u) = 0 mod p` and
/// `C_{m/r}(u) != 0 mod p` for every prime `r | m`".
pub fn is_zsigmondy(prime: &Poly, u: &Poly, m: &Poly) -> Result<bool> {
    check_q(prime.field().q())?;
    check_prime(prime)?;
    if u.is_zero() {
        return Err(Error::Zero("u"));
    }
    if m.is_zero() {
        return Err(Error::Zero("m"));
    }
    if !u.is_monic() {
        return Err(Error::NotMonic("u"));
    }
    if !m.is_monic() {
        return Err(Error::NotMonic("m"));
    }
    zsigmondy_at_prime(prime, u, m)
}

fn zsigmondy_at_prime(prime: &Poly, u: &Poly, m: &Poly) -> Result<bool> {
    let orbit = CarlitzOrbit::new(u, prime, m.degree().expect("nonzero"))?;
    if !orbit.annihilates(m) {
        return Ok(false);
    }
    let fac = factorize(m)?;
    let primitive = fac
        .primes()
        .all(|r| !orbit.annihilates(&m.div_exact(r).expect("r divides m")));
    Ok(primitive)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LargeReason {
    /// `deg p > deg m`
    Degree,
    /// `p^2 | C_m(u)`
    Square,
}

impl fmt::Display for LargeReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LargeReason::Degree => "degree",
            LargeReason::Square => "square",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LargePrime {
    pub prime: Poly,
    pub reason: LargeReason,
}

/// A prime factor of `Psi_m(u)` dividing `m`, with `m = annihilator * prime^s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonZsigmondyFactor {
    pub prime: Poly,
    pub annihilator: Poly,
    pub s: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZsigmondyReport {
    pub q: u32,
    pub u: Poly,
    pub m: Poly,
    /// `Psi_m(u)`; absent when `m = 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi_value: Option<Poly>,
    pub zsigmondy_primes: Vec<Poly>,
    pub large: Vec<LargePrime>,
    pub non_zsigmondy_factors: Vec<NonZsigmondyFactor>,
    /// The only Zsigmondy prime is `m + 1`.
    pub m_plus_one_unique: bool,
}

fn check_pair(u: &Poly, m: &Poly) -> Result<()> {
    check_q(u.field().q())?;
    if u.is_zero() {
        return Err(Error::Zero("u"));
    }
    if m.is_zero() {
        return Err(Error::Zero("m"));
    }
    u.assert_same_field(m);
    if !u.is_monic() {
        return Err(Error::NotMonic("u"));
    }
    if !m.is_monic() {
        return Err(Error::NotMonic("m"));
    }
    if u.degree() == Some(0) && m.degree() == Some(0) {
        return Err(Error::BothConstant);
    }
    Ok(())
}

/// Prime factors of `Psi_m(u)` (of `u` when `m = 1`), with the factorization
/// of that value.
fn candidate_factorization(u: &Poly, m: &Poly) -> Result<(Option<Poly>, Factorization)> {
    if m.degree() == Some(0) {
        Ok((None, factorize(u)?))
    } else {
        let psi = cyclotomic_eval(m, u)?;
        let fac = factorize(&psi)?;
        Ok((Some(psi), fac))
    }
}

fn zsigmondy_from(u: &Poly, m: &Poly, fac: &Factorization) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    for prime in fac.primes().filter(|p| !p.divides(m)) {
        if !zsigmondy_at_prime(prime, u, m)? {
            return Err(Error::Internal(format!(
                "{prime} divides the cyclotomic value but is not Zsigmondy for ({u}, {m})"
            )));
        }
        out.push(prime.clone());
    }
    Ok(out)
}

fn large_from(u: &Poly, m: &Poly, zsig: &[Poly]) -> Result<Vec<LargePrime>> {
    let dm = m.degree().expect("m is nonzero");
    let mut out = Vec::new();
    for prime in zsig {
        let reason = if prime.degree().expect("prime") > dm {
            Some(LargeReason::Degree)
        } else {
            let orbit = CarlitzOrbit::new(u, &prime.square(), dm)?;
            orbit.annihilates(m).then_some(LargeReason::Square)
        };
        if let Some(reason) = reason {
            out.push(LargePrime {
                prime: prime.clone(),
                reason,
            });
        }
    }
    Ok(out)
}

/// Zsigmondy primes for a monic pair, canonically sorted.
pub fn zsigmondy_primes(u: &Poly, m: &Poly) -> Result<Vec<Poly>> {
    check_pair(u, m)?;
    let (_, fac) = candidate_factorization(u, m)?;
    zsigmondy_from(u, m, &fac)
}

/// Zsigmondy primes `p` with `deg p > deg m` or `p^2 | C_m(u)`.
pub fn large_zsigmondy_primes(u: &Poly, m: &Poly) -> Result<Vec<LargePrime>> {
    let zsig = zsigmondy_primes(u, m)?;
    large_from(u, m, &zsig)
}

/// Full classification of `(u, m)` after normalizing both to monic.
pub fn classify(u: &Poly, m: &Poly) -> Result<ZsigmondyReport> {
    let (u, m) = normalize_pair(u, m)?;
    check_pair(&u, &m)?;
    let f = m.field();
    let (psi_value, fac) = candidate_factorization(&u, &m)?;
    let zsigmondy_primes = zsigmondy_from(&u, &m, &fac)?;
    let large = large_from(&u, &m, &zsigmondy_primes)?;

    let mut non_zsigmondy_factors = Vec::new();
    if psi_value.is_some() {
        for (prime, e) in fac.factors.iter().filter(|(p, _)| p.divides(&m)) {
            if *e > 1 {
                return Err(Error::Internal(format!("{prime}^2 divides Psi_{m}({u})")));
            }
            let annihilator = annihilator_of_prime(&u, prime)?;
            let mut rest = m.clone();
            let mut s = 0;
            while let Ok(next) = rest.div_exact(prime) {
                rest = next;
                s += 1;
            }
            if rest != annihilator || s == 0 {
                return Err(Error::Internal(format!(
                    "{m} is not P_{{u,p}} * {prime}^s for u = {u}"
                )));
            }
            non_zsigmondy_factors.push(NonZsigmondyFactor {
                prime: prime.clone(),
                annihilator,
                s,
            });
        }
    }

    let m_plus_one = &m + &Poly::one(f);
    let m_plus_one_unique = zsigmondy_primes.len() == 1 && zsigmondy_primes[0] == m_plus_one;
    Ok(ZsigmondyReport {
        q: f.q(),
        u,
        m,
        psi_value,
        zsigmondy_primes,
        large,
        non_zsigmondy_factors,
        m_plus_one_unique,
    })
}
