//! Exhaustive checks of the Zsigmondy-type theorems over bounded ranges.

mod sets;
mod table;

pub use sets::{
    bang_expected, exceptional_set, feit_expected, listed_set, SetName, SetReport, DEFAULT_X3_MAX_S,
};
pub use table::{reproduce_table, Table, TableRow, Witness};

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ffield::FieldSpec;
use crate::polyring::{monic_at, monic_count, Poly};
use crate::zsigmondy::{classify, LargePrime};

/// Number of `m` values per parallel work item.
pub const BLOCK: u64 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    pub q: u32,
    pub max_deg_m: usize,
    pub max_deg_u: usize,
}

impl SearchBounds {
    pub fn new(q: u32, max_deg_m: usize, max_deg_u: usize) -> Self {
        SearchBounds {
            q,
            max_deg_m,
            max_deg_u,
        }
    }

    pub fn contains(&self, u: &Poly, m: &Poly) -> bool {
        u.degree().is_some_and(|d| d <= self.max_deg_u)
            && m.degree().is_some_and(|d| d <= self.max_deg_m)
    }

    fn validate(&self, field: &FieldSpec) -> Result<()> {
        if field.q() != self.q {
            return Err(Error::WrongField {
                what: "search".into(),
                expected: self.q.to_string(),
                got: field.q(),
            });
        }
        if self.q == 2 {
            return Err(Error::QTooSmall);
        }
        if self.max_deg_m == 0 && self.max_deg_u == 0 {
            return Err(Error::Bounds(
                "at least one degree bound must be positive".into(),
            ));
        }
        let q = self.q as u64;
        for d in [self.max_deg_m, self.max_deg_u] {
            if u32::try_from(d)
                .ok()
                .and_then(|d| q.checked_pow(d + 1))
                .is_none()
            {
                return Err(Error::Bounds(format!(
                    "degree bound {d} is too large for q = {q}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem {
    #[serde(rename = "bang-zsigmondy")]
    BangZsigmondy,
    #[serde(rename = "feit")]
    Feit,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::BangZsigmondy => "bang-zsigmondy",
            Theorem::Feit => "feit",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Pair {
    pub u: Poly,
    pub m: Poly,
}

impl Pair {
    pub fn new(u: Poly, m: Poly) -> Self {
        Pair { u, m }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exception {
    pub u: Poly,
    pub m: Poly,
    pub zsigmondy: Vec<Poly>,
    pub large: Vec<LargePrime>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionReport {
    pub theorem: Theorem,
    pub q: u32,
    pub bounds: SearchBounds,
    pub exceptions: Vec<Exception>,
    pub expected: Vec<Pair>,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl ExceptionReport {
    pub fn exception_pairs(&self) -> BTreeSet<Pair> {
        self.exceptions
            .iter()
            .map(|e| Pair::new(e.u.clone(), e.m.clone()))
            .collect()
    }
}

/// One parallel work item: all `u` of degree `du` against a block of the
/// monic `m` of degree `dm`.
struct Chunk {
    du: usize,
    dm: usize,
    start: u64,
    end: u64,
}

fn chunks(field: &FieldSpec, bounds: &SearchBounds) -> Vec<Chunk> {
    let mut out = Vec::new();
    for du in 0..=bounds.max_deg_u {
        for dm in 0..=bounds.max_deg_m {
            if du == 0 && dm == 0 {
                continue;
            }
            let count = monic_count(field, dm);
            let mut start = 0;
            while start < count {
                let end = (start + BLOCK).min(count);
                out.push(Chunk { du, dm, start, end });
                start = end;
            }
        }
    }
    out
}

fn scan_chunk(field: &FieldSpec, theorem: Theorem, c: &Chunk) -> Result<Vec<Exception>> {
    let mut out = Vec::new();
    for mi in c.start..c.end {
        let m = monic_at(field, c.dm, mi);
        for ui in 0..monic_count(field, c.du) {
            let u = monic_at(field, c.du, ui);
            let report = classify(&u, &m)?;
            let exceptional = match theorem {
                Theorem::BangZsigmondy => report.zsigmondy_primes.is_empty(),
                Theorem::Feit => report.large.is_empty(),
            };
            if exceptional {
                out.push(Exception {
                    u: report.u,
                    m: report.m,
                    zsigmondy: report.zsigmondy_primes,
                    large: report.large,
                });
            }
        }
    }
    Ok(out)
}

/// Scans every monic pair within `bounds` (not both constant) and collects
/// the pairs lacking (large) Zsigmondy primes. `workers = 0` uses all cores.
/// The result does not depend on `workers`.
pub fn search(
    field: &FieldSpec,
    bounds: &SearchBounds,
    theorem: Theorem,
    workers: usize,
) -> Result<ExceptionReport> {
    bounds.validate(field)?;
    let work = chunks(field, bounds);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let parts: Vec<Vec<Exception>> = pool.install(|| {
        work.par_iter()
            .map(|c| scan_chunk(field, theorem, c))
            .collect::<Result<_>>()
    })?;
    let mut exceptions: Vec<Exception> = parts.into_iter().flatten().collect();
    exceptions.sort_by(|a, b| (&a.u, &a.m).cmp(&(&b.u, &b.m)));

    let expected = match theorem {
        Theorem::BangZsigmondy => bang_expected(field, bounds)?,
        Theorem::Feit => feit_expected(field, bounds)?,
    };
    let found: BTreeSet<Pair> = exceptions
        .iter()
        .map(|e| Pair::new(e.u.clone(), e.m.clone()))
        .collect();
    let matches = found == expected.iter().cloned().collect();
    Ok(ExceptionReport {
        theorem,
        q: field.q(),
        bounds: *bounds,
        exceptions,
        expected,
        matches,
    })
}

/// Pairs without Zsigmondy primes.
pub fn verify_bang_zsigmondy(
    field: &FieldSpec,
    bounds: &SearchBounds,
    workers: usize,
) -> Result<ExceptionReport> {
    search(field, bounds, Theorem::BangZsigmondy, workers)
}

/// Pairs without large Zsigmondy primes.
pub fn verify_feit(
    field: &FieldSpec,
    bounds: &SearchBounds,
    workers: usize,
) -> Result<ExceptionReport> {
    search(field, bounds, Theorem::Feit, workers)
}
