//! Cyclotomic polynomials `Psi_m(x)` of the Carlitz module and their values.
//!
//! `C_m(x) = prod_{b | m, b monic} Psi_b(x)`, so `Psi_m` is obtained by exact
//! division, never through torsion points.

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::carlitz::{carlitz_coeffs, carlitz_eval};
use crate::error::{Error, Result};
use crate::ffield::FieldSpec;
use crate::polyring::{divisors_from_factorization, factorize, Poly};
use crate::text::dense_string;

/// `deg m` at and above which [`cyclotomic_eval`] uses the value recursion.
pub const VALUE_ROUTE_MIN_DEGREE: usize = 4;

/// A polynomial in `x` with coefficients in `A`; entry `i` multiplies `x^i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XPoly {
    field: FieldSpec,
    coeffs: Vec<Poly>,
}

impl XPoly {
    pub fn new(field: &FieldSpec, mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        XPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &FieldSpec) -> Self {
        XPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn x(field: &FieldSpec) -> Self {
        XPoly::new(field, vec![Poly::zero(field), Poly::one(field)])
    }

    /// `C_m(x)` as a polynomial in `x`.
    pub fn carlitz(m: &Poly) -> Result<Self> {
        let f = m.field();
        let cc = carlitz_coeffs(m)?;
        let q = f.q() as usize;
        let top = q.pow(cc.coeffs().len() as u32 - 1);
        let mut coeffs = vec![Poly::zero(f); top + 1];
        for (i, c) in cc.coeffs().iter().enumerate() {
            coeffs[q.pow(i as u32)] = c.clone();
        }
        Ok(XPoly::new(f, coeffs))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Poly::is_one)
    }

    pub fn mul(&self, other: &XPoly) -> XPoly {
        if self.is_zero() || other.is_zero() {
            return XPoly::zero(&self.field);
        }
        let mut out = vec![Poly::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        XPoly::new(&self.field, out)
    }

    /// Division by a polynomial that is monic in `x`.
    pub fn divmod_monic(&self, divisor: &XPoly) -> (XPoly, XPoly) {
        assert!(divisor.is_monic(), "divisor must be monic in x");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (XPoly::zero(&self.field), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Poly::zero(&self.field); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = std::mem::replace(&mut rem[k], Poly::zero(&self.field));
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs[..dd].iter().enumerate() {
                if !b.is_zero() {
                    rem[k - dd + j] = &rem[k - dd + j] - &(&c * b);
                }
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (XPoly::new(&self.field, quot), XPoly::new(&self.field, rem))
    }

    /// Horner evaluation at `u`.
    pub fn eval(&self, u: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(&self.field), |acc, c| &(&acc * u) + c)
    }

    /// Substitutes `x -> g(x)`.
    pub fn compose(&self, g: &XPoly) -> XPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(XPoly::zero(&self.field), |acc, c| {
                let mut next = acc.mul(g);
                if !c.is_zero() {
                    if next.coeffs.is_empty() {
                        next.coeffs.push(Poly::zero(&self.field));
                    }
                    next.coeffs[0] = &next.coeffs[0] + c;
                }
                XPoly::new(&self.field, next.coeffs)
            })
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&dense_string(&self.coeffs, "x", |c| {
            (!c.is_zero()).then(|| c.to_string())
        }))
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}

impl Serialize for XPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn check_index(m: &Poly) -> Result<()> {
    match m.degree() {
        None => Err(Error::Zero("m")),
        Some(0) => Err(Error::Constant("m")),
        Some(_) if !m.is_monic() => Err(Error::NotMonic("m")),
        Some(_) => Ok(()),
    }
}

fn check_eval_args(m: &Poly, u: &Poly) -> Result<()> {
    check_index(m)?;
    m.assert_same_field(u);
    if u.is_zero() {
        return Err(Error::Zero("u"));
    }
    if m.field().q() == 2 {
        return Err(Error::QTooSmall);
    }
    Ok(())
}

/// Monic divisors of a monic `m`, canonically sorted (so every divisor comes
/// after all of its own proper divisors).
fn sorted_divisors(m: &Poly) -> Result<Vec<Poly>> {
    Ok(divisors_from_factorization(&factorize(m)?))
}

/// Runs the divisor-lattice recursion `Psi_d = top(d) / prod_{e | d, e != d} Psi_e`
/// over all monic divisors of `m` and returns `Psi_m`.
fn lattice<V: Clone>(
    m: &Poly,
    top: impl Fn(&Poly) -> Result<V>,
    divide: impl Fn(&V, &V) -> Result<V>,
) -> Result<V> {
    let divisors = sorted_divisors(m)?;
    let mut memo: HashMap<&Poly, V> = HashMap::with_capacity(divisors.len());
    for d in &divisors {
        let mut value = top(d)?;
        for e in &divisors {
            if e.degree() >= d.degree() {
                break;
            }
            if e.divides(d) {
                value = divide(&value, &memo[e])?;
            }
        }
        memo.insert(d, value);
    }
    Ok(memo.remove(m).expect("m divides itself"))
}

/// `Psi_m(x)` for monic `m` of positive degree.
pub fn cyclotomic_poly(m: &Poly) -> Result<XPoly> {
    check_index(m)?;
    lattice(m, XPoly::carlitz, |a, b| {
        let (quot, rem) = a.divmod_monic(b);
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::Internal(
                "nonzero remainder in cyclotomic division".into(),
            ))
        }
    })
}

/// `Psi_m(u)` by evaluating `Psi_m(x)`.
pub fn cyclotomic_eval_xpoly(m: &Poly, u: &Poly) -> Result<Poly> {
    check_eval_args(m, u)?;
    Ok(cyclotomic_poly(m)?.eval(u))
}

/// `Psi_m(u) = C_m(u) / prod_{b | m, b != m} Psi_b(u)` by exact division in `A`.
pub fn cyclotomic_eval_values(m: &Poly, u: &Poly) -> Result<Poly> {
    check_eval_args(m, u)?;
    lattice(
        m,
        |d| Ok(carlitz_eval(d, u)),
        |a, b| {
            a.div_exact(b)
                .map_err(|_| Error::Internal("cyclotomic value not divisible".into()))
        },
    )
}

/// `Psi_m(u)`; the route is chosen by `deg m` (see [`VALUE_ROUTE_MIN_DEGREE`]).
pub fn cyclotomic_eval(m: &Poly, u: &Poly) -> Result<Poly> {
    if m.degree().is_some_and(|d| d >= VALUE_ROUTE_MIN_DEGREE) {
        cyclotomic_eval_values(m, u)
    } else {
        cyclotomic_eval_xpoly(m, u)
    }
}
