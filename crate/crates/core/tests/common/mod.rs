//! Shared checks for the integration and acceptance targets. Every check
//! returns the list of violations it found; an empty list is a pass.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use carlitz_core::carlitz::{carlitz_coeffs, carlitz_eval, carlitz_eval_mod};
use carlitz_core::cyclotomic::{cyclotomic_eval, cyclotomic_poly, XPoly};
use carlitz_core::polyring::{
    enumerate_monic, enumerate_monic_irreducible, enumerate_monic_up_to, factorize, monic_divisors,
    Poly,
};
use carlitz_core::verify::{Pair, SetName};
use carlitz_core::zsigmondy::carlitz_annihilator;
use carlitz_core::{parse_poly, FieldSpec};

pub fn field(q: u32) -> FieldSpec {
    FieldSpec::from_q(q).unwrap()
}

pub fn poly(f: &FieldSpec, s: &str) -> Poly {
    parse_poly(s, f).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + tag)
}

/// A uniformly random polynomial of degree at most `d` (possibly zero).
pub fn random_poly(f: &FieldSpec, d: usize, rng: &mut ChaCha8Rng) -> Poly {
    Poly::new(f, (0..=d).map(|_| rng.gen_range(0..f.q()) as u8).collect())
}

pub fn random_nonzero(f: &FieldSpec, d: usize, rng: &mut ChaCha8Rng) -> Poly {
    loop {
        let p = random_poly(f, d, rng);
        if !p.is_zero() {
            return p;
        }
    }
}

/// All polynomials (monic or not, zero included) of degree at most `d`.
pub fn all_polys(f: &FieldSpec, d: usize) -> Vec<Poly> {
    let q = f.q() as u64;
    (0..q.pow(d as u32 + 1))
        .map(|mut i| {
            let coeffs = (0..=d)
                .map(|_| {
                    let c = (i % q) as u8;
                    i /= q;
                    c
                })
                .collect();
            Poly::new(f, coeffs)
        })
        .collect()
}

fn pairs(f: &FieldSpec, items: &[(&str, &str)]) -> BTreeSet<Pair> {
    items
        .iter()
        .map(|(u, m)| Pair::new(poly(f, u), poly(f, m)))
        .collect()
}

fn ones(f: &FieldSpec, ms: &[&str]) -> BTreeSet<Pair> {
    ms.iter()
        .map(|m| Pair::new(Poly::one(f), poly(f, m)))
        .collect()
}

// ---------------------------------------------------------------------------
// Reference tables and sets.

pub struct TableRowLit {
    pub prime: &'static str,
    pub m: &'static str,
    pub factors: &'static [(&'static str, u32)],
    pub witnesses: [&'static str; 2],
}

pub const TABLE2: [TableRowLit; 3] = [
    TableRowLit {
        prime: "T",
        m: "(T-1)*T",
        factors: &[("T", 2), ("T+1", 1)],
        witnesses: ["T", "T+1"],
    },
    TableRowLit {
        prime: "T+1",
        m: "T*(T+1)",
        factors: &[("T+1", 2), ("T+2", 1)],
        witnesses: ["T+1", "T+2"],
    },
    TableRowLit {
        prime: "T+2",
        m: "(T+1)*(T+2)",
        factors: &[("T", 1), ("T+2", 2)],
        witnesses: ["T", "T+2"],
    },
];

pub const TABLE3: [TableRowLit; 4] = [
    TableRowLit {
        prime: "T",
        m: "(T-1)*T",
        factors: &[("T", 2), ("T+1", 2)],
        witnesses: ["T", "T+1"],
    },
    TableRowLit {
        prime: "T+1",
        m: "T*(T+1)",
        factors: &[("T", 2), ("T+1", 2)],
        witnesses: ["T", "T+1"],
    },
    TableRowLit {
        prime: "T+w",
        m: "(T+w-1)*(T+w)",
        factors: &[("T+w", 2), ("T+w^2", 2)],
        witnesses: ["T+w", "T+w^2"],
    },
    TableRowLit {
        prime: "T+w^2",
        m: "(T+w^2-1)*(T+w^2)",
        factors: &[("T+w", 2), ("T+w^2", 2)],
        witnesses: ["T+w", "T+w^2"],
    },
];

/// Pairs without Zsigmondy primes: `(1, (p - 1) p)` over `F_3` and `F_4`.
pub fn bang_literal(f: &FieldSpec) -> BTreeSet<Pair> {
    match f.q() {
        3 => ones(f, &["(T-1)*T", "T*(T+1)", "(T+1)*(T+2)"]),
        4 => ones(
            f,
            &["(T-1)*T", "T*(T+1)", "(T+w-1)*(T+w)", "(T+w^2-1)*(T+w^2)"],
        ),
        _ => BTreeSet::new(),
    }
}

pub fn set_literal(name: SetName, f: &FieldSpec) -> BTreeSet<Pair> {
    match name {
        SetName::X3 => ones(f, &["(T-1)*T^2", "T*(T+1)^2", "(T+1)*(T+2)^2"]),
        SetName::X4 => pairs(f, &[("T", "T"), ("T+1", "T+1"), ("T+2", "T+2")]),
        SetName::X5 => BTreeSet::new(),
        SetName::X6 => ones(
            f,
            &[
                "T*(T+1)",
                "(T+1)*(T+2)",
                "(T+2)*(T+3)",
                "(T+3)*(T+4)",
                "(T+4)*T",
            ],
        ),
        SetName::X7 => enumerate_monic(f, 1)
            .map(|m| Pair::new(Poly::one(f), m))
            .collect(),
        SetName::X8 => ones(f, &["T^2", "(T+1)^2", "(T+2)^2"]),
        SetName::X9 => ones(f, &["T*(T+w)", "T*(T+w^2)", "(T+1)*(T+w)", "(T+1)*(T+w^2)"]),
        SetName::X10 => ones(f, &["T^3+2*T"]),
    }
}

/// Union of the large-Zsigmondy exceptional cases for `F_q`, before bounds.
pub fn feit_literal(f: &FieldSpec) -> BTreeSet<Pair> {
    let mut out = bang_literal(f);
    let sets: &[SetName] = match f.q() {
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
    for &s in sets {
        out.extend(set_literal(s, f));
    }
    out
}

pub fn within(set: BTreeSet<Pair>, max_deg_m: usize, max_deg_u: usize) -> BTreeSet<Pair> {
    set.into_iter()
        .filter(|p| p.m.degree().unwrap() <= max_deg_m && p.u.degree().unwrap() <= max_deg_u)
        .collect()
}

// ---------------------------------------------------------------------------
// Oracles.

/// Least-degree monic `n` with `p | C_n(u)`, by scanning monic polynomials in
/// order and evaluating exactly.
pub fn brute_annihilator(u: &Poly, prime: &Poly) -> Poly {
    let f = prime.field();
    if prime.divides(u) {
        return Poly::one(f);
    }
    for d in 1..=prime.degree().unwrap() {
        for n in enumerate_monic(f, d) {
            if carlitz_eval(&n, u).rem(prime).unwrap().is_zero() {
                return n;
            }
        }
    }
    panic!("no annihilator of degree <= deg p for ({u}, {prime})");
}

/// Product over distinct primes, prime count, and squarefreeness.
pub fn phi_and_shape(m: &Poly) -> (u64, usize, bool) {
    let fac = factorize(m).unwrap();
    let q = m.field().q() as u64;
    let phi = fac
        .factors
        .iter()
        .map(|(p, e)| {
            let d = p.degree().unwrap() as u32;
            q.pow(d * e) - q.pow(d * (e - 1))
        })
        .product();
    (
        phi,
        fac.factors.len(),
        fac.factors.iter().all(|(_, e)| *e == 1),
    )
}

// ---------------------------------------------------------------------------
// Property suites.

/// Degree of `C_m(u)` and `Psi_m(u)` over `deg m <= max_m`, `deg u <= max_u`.
pub fn degree_law_violations(q: u32, max_m: usize, max_u: usize) -> Vec<String> {
    let f = field(q);
    let ms: Vec<Poly> = (1..=max_m).flat_map(|d| enumerate_monic(&f, d)).collect();
    let us: Vec<Poly> = enumerate_monic_up_to(&f, max_u).collect();
    let qn = q as usize;
    ms.par_iter()
        .flat_map_iter(|m| {
            let dm = m.degree().unwrap();
            let (phi, h, squarefree) = phi_and_shape(m);
            let mut bad = Vec::new();
            for u in &us {
                let du = u.degree().unwrap();
                let c = carlitz_eval(m, u);
                let want_c = if du >= 1 {
                    du * qn.pow(dm as u32)
                } else {
                    qn.pow(dm as u32 - 1)
                };
                if c.degree() != Some(want_c) {
                    bad.push(format!(
                        "q={q} deg C_{m}({u}) = {:?}, expected {want_c}",
                        c.degree()
                    ));
                }
                let psi = cyclotomic_eval(m, u).unwrap();
                let want_psi = if du >= 1 {
                    du as u64 * phi
                } else if squarefree {
                    let sign: i64 = if h % 2 == 1 { 1 } else { -1 };
                    ((phi as i64 + sign) / q as i64) as u64
                } else {
                    phi / q as u64
                };
                if psi.degree() != Some(want_psi as usize) {
                    bad.push(format!(
                        "q={q} deg Psi_{m}({u}) = {:?}, expected {want_psi}",
                        psi.degree()
                    ));
                }
            }
            bad
        })
        .collect()
}

/// `C_m(u) != 0` for `u != 0` (all `u`, not only monic ones, of degree <= max_u).
pub fn nonvanishing_violations(q: u32, max_m: usize, max_u: usize) -> Vec<String> {
    let f = field(q);
    let mut bad = Vec::new();
    let us = all_polys(&f, max_u);
    for m in (1..=max_m).flat_map(|d| enumerate_monic(&f, d)) {
        for u in &us {
            if carlitz_eval(&m, u).is_zero() != u.is_zero() {
                bad.push(format!("C_{m}({u}) vanishing mismatch"));
            }
        }
    }
    bad
}

fn check_composition(a: &Poly, b: &Poly, bad: &mut Vec<String>) {
    let ab = a * b;
    let lhs = if ab.is_zero() {
        XPoly::zero(a.field())
    } else {
        XPoly::carlitz(&ab).unwrap()
    };
    let ca = if a.is_zero() {
        XPoly::zero(a.field())
    } else {
        XPoly::carlitz(a).unwrap()
    };
    let cb = if b.is_zero() {
        XPoly::zero(a.field())
    } else {
        XPoly::carlitz(b).unwrap()
    };
    if lhs != ca.compose(&cb) {
        bad.push(format!("C_({a})({b}) != C_{a} o C_{b}"));
    }
    let sum = a + b;
    let coeffs = |p: &Poly| -> Vec<Poly> {
        if p.is_zero() {
            Vec::new()
        } else {
            carlitz_coeffs(p).unwrap().coeffs().to_vec()
        }
    };
    let (x, y, z) = (coeffs(a), coeffs(b), coeffs(&sum));
    let n = x.len().max(y.len()).max(z.len());
    let zero = Poly::zero(a.field());
    for i in 0..n {
        let get = |v: &Vec<Poly>| v.get(i).cloned().unwrap_or_else(|| zero.clone());
        if get(&z) != &get(&x) + &get(&y) {
            bad.push(format!("C_({a}+{b}) coefficient {i} is not additive"));
        }
    }
}

/// Composition and additivity of `a -> C_a`.
pub fn ring_action_violations() -> Vec<String> {
    let mut bad = Vec::new();
    let f3 = field(3);
    let all = all_polys(&f3, 2);
    for a in &all {
        for b in &all {
            check_composition(a, b, &mut bad);
        }
    }
    for q in [4, 5] {
        let f = field(q);
        let mut r = rng(q as u64);
        for _ in 0..200 {
            let a = random_poly(&f, 2, &mut r);
            let b = random_poly(&f, 2, &mut r);
            check_composition(&a, &b, &mut bad);
        }
    }
    bad
}

/// `prod_{b | m} Psi_b(x) = C_m(x)` for monic `m` of degree <= 3.
pub fn product_formula_violations() -> Vec<String> {
    let mut bad = Vec::new();
    for q in [3, 4] {
        let f = field(q);
        for m in (1..=3).flat_map(|d| enumerate_monic(&f, d)) {
            let product = monic_divisors(&m)
                .unwrap()
                .iter()
                .map(|b| {
                    if b.is_one() {
                        XPoly::x(&f)
                    } else {
                        cyclotomic_poly(b).unwrap()
                    }
                })
                .fold(XPoly::new(&f, vec![Poly::one(&f)]), |acc, p| acc.mul(&p));
            if product != XPoly::carlitz(&m).unwrap() {
                bad.push(format!("q={q}: product formula fails for {m}"));
            }
        }
    }
    bad
}

/// `Psi_m(C_{p^h}(x)) = Psi_{m p^h}(x) Psi_m(C_{p^(h-1)}(x))` for linear,
/// coprime `m`, `p`.
pub fn functional_identity_violations() -> Vec<String> {
    let f = field(3);
    let mut bad = Vec::new();
    for m in enumerate_monic(&f, 1) {
        let psi_m = cyclotomic_poly(&m).unwrap();
        for prime in enumerate_monic(&f, 1).filter(|p| p != &m) {
            for h in 1..=2u64 {
                let lhs = psi_m.compose(&XPoly::carlitz(&prime.pow(h)).unwrap());
                let rhs = cyclotomic_poly(&(&m * &prime.pow(h)))
                    .unwrap()
                    .mul(&psi_m.compose(&XPoly::carlitz(&prime.pow(h - 1)).unwrap()));
                if lhs != rhs {
                    bad.push(format!("identity fails for m={m}, p={prime}, h={h}"));
                }
            }
        }
    }
    bad
}

/// `Psi_m(x)` divides `C_m(x) / C_{m/r}(x)` for each prime `r | m`.
pub fn divisibility_violations() -> Vec<String> {
    let f = field(3);
    let mut bad = Vec::new();
    for m in (1..=3).flat_map(|d| enumerate_monic(&f, d)) {
        let psi = cyclotomic_poly(&m).unwrap();
        let cm = XPoly::carlitz(&m).unwrap();
        for (r, _) in factorize(&m).unwrap().factors {
            let (quot, rem) = cm.divmod_monic(&XPoly::carlitz(&m.div_exact(&r).unwrap()).unwrap());
            let (_, rem2) = quot.divmod_monic(&psi);
            if !rem.is_zero() || !rem2.is_zero() {
                bad.push(format!("Psi_{m} does not divide C_m / C_(m/{r})"));
            }
        }
    }
    bad
}

/// Middle coefficients of `C_p` are divisible by `p`.
pub fn eisenstein_violations() -> Vec<String> {
    let mut bad = Vec::new();
    for q in [3, 4] {
        let f = field(q);
        for d in 1..=4 {
            for prime in enumerate_monic_irreducible(&f, d) {
                let c = carlitz_coeffs(&prime).unwrap();
                for i in 1..d {
                    if !prime.divides(&c.get(i)) {
                        bad.push(format!("q={q}: {prime} does not divide [{prime}, {i}]"));
                    }
                }
            }
        }
    }
    bad
}

/// `C_{p-1}(u) = 0 mod p` for primes of degree <= 3 and 50 random `u` each.
pub fn fermat_violations() -> Vec<String> {
    let mut bad = Vec::new();
    for q in [3, 4, 5] {
        let f = field(q);
        let mut r = rng(100 + q as u64);
        for d in 1..=3 {
            for prime in enumerate_monic_irreducible(&f, d) {
                let pm1 = &prime - &Poly::one(&f);
                for _ in 0..50 {
                    let u = random_nonzero(&f, 4, &mut r);
                    if !carlitz_eval(&pm1, &u).rem(&prime).unwrap().is_zero() {
                        bad.push(format!("q={q}: C_({pm1})({u}) != 0 mod {prime}"));
                    }
                }
            }
        }
    }
    bad
}

/// Annihilator algorithm against the brute-force scan, `q = 3`.
pub fn annihilator_oracle_violations() -> Vec<String> {
    let f = field(3);
    let us: Vec<Poly> = enumerate_monic_up_to(&f, 2).collect();
    let primes: Vec<Poly> = (1..=3)
        .flat_map(|d| enumerate_monic_irreducible(&f, d))
        .collect();
    primes
        .par_iter()
        .flat_map_iter(|prime| {
            let mut bad = Vec::new();
            for u in &us {
                let fast = carlitz_annihilator(u, prime).unwrap();
                let slow = brute_annihilator(u, prime);
                if fast != slow {
                    bad.push(format!("P_({u},{prime}): fast {fast}, brute {slow}"));
                }
            }
            bad
        })
        .collect()
}

/// Modular evaluation against exact evaluation then reduction.
pub fn eval_mod_oracle_violations(cases: usize) -> Vec<String> {
    let mut bad = Vec::new();
    for q in [3, 4, 5, 9] {
        let f = field(q);
        let mut r = rng(200 + q as u64);
        for _ in 0..cases {
            let m = random_poly(&f, 3, &mut r);
            let u = random_poly(&f, 3, &mut r);
            let modulus = loop {
                let c = random_poly(&f, 4, &mut r);
                if c.degree().unwrap_or(0) >= 1 {
                    break c;
                }
            };
            let fast = carlitz_eval_mod(&m, &u, &modulus).unwrap();
            let slow = carlitz_eval(&m, &u).rem(&modulus).unwrap();
            if fast != slow {
                bad.push(format!(
                    "q={q}: C_({m})({u}) mod {modulus}: {fast} vs {slow}"
                ));
            }
        }
    }
    bad
}

/// For each prime factor `p` of `Psi_m(u)`: `P_{u,p} != m` iff `p | m`, and
/// then `m = P_{u,p} p^s` with `s >= 1` and `p^2` not dividing `Psi_m(u)`.
pub fn luneburg_violations() -> Vec<String> {
    let f = field(3);
    let us: Vec<Poly> = enumerate_monic_up_to(&f, 2).collect();
    let ms: Vec<Poly> = enumerate_monic_up_to(&f, 3).collect();
    ms.par_iter()
        .flat_map_iter(|m| {
            let mut bad = Vec::new();
            for u in &us {
                if m.degree() == Some(0) {
                    continue;
                }
                let psi = cyclotomic_eval(m, u).unwrap();
                for (prime, e) in factorize(&psi).unwrap().factors {
                    let ann = carlitz_annihilator(u, &prime).unwrap();
                    let non_zsigmondy = &ann != m;
                    if non_zsigmondy != prime.divides(m) {
                        bad.push(format!(
                            "({u}, {m}): {prime} divides m = {}, annihilator {ann}",
                            prime.divides(m)
                        ));
                    }
                    if non_zsigmondy {
                        let mut rest = m.clone();
                        let mut s = 0;
                        while prime.divides(&rest) {
                            rest = rest.div_exact(&prime).unwrap();
                            s += 1;
                        }
                        if rest != ann || s == 0 {
                            bad.push(format!("({u}, {m}): m != P * {prime}^s"));
                        }
                        if e > 1 {
                            bad.push(format!("({u}, {m}): {prime}^2 divides Psi_m(u)"));
                        }
                    }
                }
            }
            bad
        })
        .collect()
}
