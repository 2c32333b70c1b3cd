//! Tables of `C_m(1)` for `m = (p - 1) p`, `p` linear, over `F_3` and `F_4`.

use serde::Serialize;

use crate::carlitz::carlitz_eval;
use crate::error::{Error, Result};
use crate::ffield::FieldSpec;
use crate::polyring::{enumerate_monic, factorize, Poly};
use crate::zsigmondy::zsigmondy_primes;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorPower {
    pub prime: Poly,
    pub exponent: u32,
}

/// `C_n(1)` for one of the two factors `n` of `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: Poly,
    pub value: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub prime: Poly,
    pub m: Poly,
    pub carlitz_value: Poly,
    pub factorization: Vec<FactorPower>,
    /// `C_{p-1}(1)` and `C_p(1)`.
    pub witnesses: [Witness; 2],
    pub zsigmondy: Vec<Poly>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub table: u32,
    pub q: u32,
    pub rows: Vec<TableRow>,
}

/// Table 2 is over `F_3`, table 3 over `F_4`; one row per linear prime.
pub fn reproduce_table(which: u32) -> Result<Table> {
    let q = match which {
        2 => 3,
        3 => 4,
        _ => return Err(Error::UnknownName(format!("table {which}"))),
    };
    let field = FieldSpec::from_q(q)?;
    let one = Poly::one(&field);
    let mut rows = Vec::new();
    for prime in enumerate_monic(&field, 1) {
        let base = &prime - &one;
        let m = &base * &prime;
        let value = carlitz_eval(&m, &one);
        let fac = factorize(&value)?;
        let factorization = fac
            .factors
            .into_iter()
            .map(|(prime, exponent)| FactorPower { prime, exponent })
            .collect();
        let witnesses = [
            Witness {
                value: carlitz_eval(&base, &one),
                n: base,
            },
            Witness {
                value: carlitz_eval(&prime, &one),
                n: prime.clone(),
            },
        ];
        let zsigmondy = zsigmondy_primes(&one, &m)?;
        rows.push(TableRow {
            prime,
            m,
            carlitz_value: value,
            factorization,
            witnesses,
            zsigmondy,
        });
    }
    Ok(Table {
        table: which,
        q,
        rows,
    })
}
