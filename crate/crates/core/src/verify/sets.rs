//! Exceptional sets: the listed members, and their recomputation from the
//! defining conditions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ffield::FieldSpec;
use crate::polyring::{
    enumerate_monic, enumerate_monic_irreducible, factorize, is_irreducible, Poly,
};
use crate::text::parse_poly;
use crate::zsigmondy::{carlitz_annihilator, classify};

use super::{Pair, SearchBounds};

/// Upper end of the exponent range scanned for X3.
pub const DEFAULT_X3_MAX_S: u32 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetName {
    X3,
    X4,
    X5,
    X6,
    X7,
    X8,
    X9,
    X10,
}

impl SetName {
    pub const ALL: [SetName; 8] = [
        SetName::X3,
        SetName::X4,
        SetName::X5,
        SetName::X6,
        SetName::X7,
        SetName::X8,
        SetName::X9,
        SetName::X10,
    ];

    /// The field size the set is defined for; `None` for any `q > 2`.
    pub fn required_q(self) -> Option<u32> {
        match self {
            SetName::X3 | SetName::X4 | SetName::X5 | SetName::X8 | SetName::X10 => Some(3),
            SetName::X6 => Some(5),
            SetName::X9 => Some(4),
            SetName::X7 => None,
        }
    }

    fn check_field(self, field: &FieldSpec) -> Result<()> {
        if field.q() == 2 {
            return Err(Error::QTooSmall);
        }
        match self.required_q() {
            Some(q) if q != field.q() => Err(Error::WrongField {
                what: self.to_string(),
                expected: q.to_string(),
                got: field.q(),
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for SetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}", *self as u8 + 3)
    }
}

impl FromStr for SetName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SetName::ALL
            .into_iter()
            .find(|n| n.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// A recomputed exceptional set, as written to golden files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetReport {
    pub set: String,
    pub q: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_s: Option<u32>,
    pub members: Vec<Pair>,
}

impl SetReport {
    pub fn compute(name: SetName, field: &FieldSpec, max_s: Option<u32>) -> Result<Self> {
        let max_s = if name == SetName::X3 {
            Some(max_s.unwrap_or(DEFAULT_X3_MAX_S))
        } else {
            None
        };
        Ok(SetReport {
            set: name.to_string(),
            q: field.q(),
            max_s,
            members: exceptional_set(name, field, max_s)?,
        })
    }
}

fn linear_primes(field: &FieldSpec) -> Vec<Poly> {
    enumerate_monic(field, 1).collect()
}

fn parse_all(field: &FieldSpec, items: &[&str]) -> Vec<Poly> {
    items
        .iter()
        .map(|s| parse_poly(s, field).expect("well-formed literal"))
        .collect()
}

/// The members as listed in the statements, as `(u, m)` pairs in canonical
/// order. X7 is every monic linear polynomial.
pub fn listed_set(name: SetName, field: &FieldSpec) -> Result<Vec<Pair>> {
    name.check_field(field)?;
    let ms = match name {
        SetName::X3 => parse_all(field, &["(T-1)*T^2", "T*(T+1)^2", "(T+1)*(T+2)^2"]),
        SetName::X4 => parse_all(field, &["T", "T+1", "T+2"]),
        SetName::X5 => Vec::new(),
        SetName::X6 => parse_all(
            field,
            &[
                "T*(T+1)",
                "(T+1)*(T+2)",
                "(T+2)*(T+3)",
                "(T+3)*(T+4)",
                "(T+4)*T",
            ],
        ),
        SetName::X7 => linear_primes(field),
        SetName::X8 => parse_all(field, &["T^2", "(T+1)^2", "(T+2)^2"]),
        SetName::X9 => parse_all(
            field,
            &["T*(T+w)", "T*(T+w^2)", "(T+1)*(T+w)", "(T+1)*(T+w^2)"],
        ),
        SetName::X10 => parse_all(field, &["T^3+2*T"]),
    };
    let one = Poly::one(field);
    let pairs: BTreeSet<Pair> = ms
        .into_iter()
        .map(|m| {
            let u = if name == SetName::X4 {
                m.clone()
            } else {
                one.clone()
            };
            Pair::new(u, m)
        })
        .collect();
    Ok(pairs.into_iter().collect())
}

/// "`m + 1` is the only Zsigmondy prime for `(u, m)` and there are no large
/// Zsigmondy primes".
fn only_m_plus_one_and_not_large(u: &Poly, m: &Poly) -> Result<bool> {
    let r = classify(u, m)?;
    Ok(r.m_plus_one_unique && r.large.is_empty())
}

fn no_large(u: &Poly, m: &Poly) -> Result<bool> {
    Ok(classify(u, m)?.large.is_empty())
}

fn is_squarefree(m: &Poly) -> Result<bool> {
    Ok(factorize(m)?.factors.iter().all(|(_, e)| *e == 1))
}

/// Recomputes a set from its defining conditions. `max_s` overrides the
/// exponent range of X3 (`2..=max_s`); it is ignored by the other sets.
pub fn exceptional_set(name: SetName, field: &FieldSpec, max_s: Option<u32>) -> Result<Vec<Pair>> {
    name.check_field(field)?;
    let one = Poly::one(field);
    let mut members = BTreeSet::new();
    let keep_m = |m: Poly, members: &mut BTreeSet<Pair>| {
        members.insert(Pair::new(one.clone(), m));
    };
    match name {
        SetName::X3 | SetName::X6 => {
            let range = if name == SetName::X3 {
                2..=max_s.unwrap_or(DEFAULT_X3_MAX_S)
            } else {
                1..=1
            };
            for prime in linear_primes(field) {
                let base = &prime - &one;
                for s in range.clone() {
                    let m = &base * &prime.pow(s as u64);
                    if only_m_plus_one_and_not_large(&one, &m)? {
                        keep_m(m, &mut members);
                    }
                }
            }
        }
        SetName::X4 => {
            for m in linear_primes(field) {
                if only_m_plus_one_and_not_large(&m, &m)? {
                    members.insert(Pair::new(m.clone(), m));
                }
            }
        }
        SetName::X5 => {
            for d in 2..=3 {
                for prime in enumerate_monic_irreducible(field, d) {
                    let ann = carlitz_annihilator(&one, &prime)?;
                    if ann.degree() != Some(2) {
                        continue;
                    }
                    let m = &ann * &prime;
                    if is_irreducible(&(&m + &one))? {
                        keep_m(m, &mut members);
                    }
                }
            }
        }
        SetName::X7 => {
            for m in linear_primes(field) {
                if no_large(&one, &m)? {
                    keep_m(m, &mut members);
                }
            }
        }
        SetName::X8 => {
            for prime in linear_primes(field) {
                let m = prime.square();
                if only_m_plus_one_and_not_large(&one, &m)? {
                    keep_m(m, &mut members);
                }
            }
        }
        SetName::X9 => {
            let lin = linear_primes(field);
            for (i, a) in lin.iter().enumerate() {
                for b in &lin[i + 1..] {
                    let m = a * b;
                    if only_m_plus_one_and_not_large(&one, &m)? {
                        keep_m(m, &mut members);
                    }
                }
            }
        }
        SetName::X10 => {
            // Squarefree m = m1*m2 with deg m1 in {1, 2}, deg m2 = 1 and the
            // factors coprime: squarefree of degree 2 or 3 with a linear factor.
            for d in 2..=3 {
                for m in enumerate_monic(field, d) {
                    let has_linear = linear_primes(field).iter().any(|l| l.divides(&m));
                    if has_linear && is_squarefree(&m)? && only_m_plus_one_and_not_large(&one, &m)?
                    {
                        keep_m(m, &mut members);
                    }
                }
            }
        }
    }
    Ok(members.into_iter().collect())
}

fn pairs_in(pairs: impl IntoIterator<Item = Pair>, bounds: &SearchBounds) -> Vec<Pair> {
    let set: BTreeSet<Pair> = pairs
        .into_iter()
        .filter(|p| bounds.contains(&p.u, &p.m))
        .collect();
    set.into_iter().collect()
}

/// `(1, (p - 1) p)` for linear primes `p`, when `q` is 3 or 4; empty otherwise.
pub fn bang_expected(field: &FieldSpec, bounds: &SearchBounds) -> Result<Vec<Pair>> {
    let one = Poly::one(field);
    let pairs: Vec<Pair> = if matches!(field.q(), 3 | 4) {
        linear_primes(field)
            .into_iter()
            .map(|p| Pair::new(one.clone(), &(&p - &one) * &p))
            .collect()
    } else {
        Vec::new()
    };
    Ok(pairs_in(pairs, bounds))
}

/// Union of the exceptional cases of the large-Zsigmondy theorem for this `q`.
pub fn feit_expected(field: &FieldSpec, bounds: &SearchBounds) -> Result<Vec<Pair>> {
    let mut pairs = bang_expected(
        field,
        &SearchBounds {
            max_deg_m: usize::MAX,
            ..*bounds
        },
    )?;
    let sets: &[SetName] = match field.q() {
        3 => &[
            SetName::X3,
            SetName::X4,
            SetName::X7,
            SetName::X8,
            SetName::X10,
        ],
        4 => &[SetName::X7, SetName::X9],
        5 => &[SetName::X6, SetName::X7],
        _ => &[SetName::X7],
    };
    for &name in sets {
        pairs.extend(listed_set(name, field)?);
    }
    Ok(pairs_in(pairs, bounds))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(pairs: &[Pair]) -> Vec<String> {
        pairs.iter().map(|p| p.m.to_string()).collect()
    }

    #[test]
    fn names() {
        assert_eq!("x10".parse::<SetName>().unwrap(), SetName::X10);
        assert_eq!(SetName::X3.to_string(), "X3");
        assert!("X2".parse::<SetName>().is_err());
    }

    #[test]
    fn field_checks() {
        let f4 = FieldSpec::from_q(4).unwrap();
        assert!(matches!(
            exceptional_set(SetName::X3, &f4, None),
            Err(Error::WrongField { .. })
        ));
        assert!(exceptional_set(SetName::X7, &f4, None).is_ok());
        let f2 = FieldSpec::from_q(2).unwrap();
        assert_eq!(
            exceptional_set(SetName::X7, &f2, None).unwrap_err(),
            Error::QTooSmall
        );
    }

    #[test]
    fn small_sets() {
        let f3 = FieldSpec::from_q(3).unwrap();
        assert!(exceptional_set(SetName::X5, &f3, None).unwrap().is_empty());
        assert_eq!(
            ms(&exceptional_set(SetName::X10, &f3, None).unwrap()),
            ["T^3+2*T"]
        );
        assert_eq!(
            ms(&exceptional_set(SetName::X8, &f3, None).unwrap()),
            ["T^2", "T^2+T+1", "T^2+2*T+1"]
        );
    }

    #[test]
    fn expected_sets() {
        let f3 = FieldSpec::from_q(3).unwrap();
        let b = SearchBounds::new(3, 3, 1);
        let e = feit_expected(&f3, &b).unwrap();
        // 3 of shape (p - 1) p, 3 in X3, X4, X7 and X8 each, 1 in X10
        assert_eq!(e.len(), 16);
        let f5 = FieldSpec::from_q(5).unwrap();
        assert!(bang_expected(&f5, &SearchBounds::new(5, 2, 1))
            .unwrap()
            .is_empty());
        let f4 = FieldSpec::from_q(4).unwrap();
        assert_eq!(
            bang_expected(&f4, &SearchBounds::new(4, 2, 1))
                .unwrap()
                .len(),
            2
        );
    }
}
