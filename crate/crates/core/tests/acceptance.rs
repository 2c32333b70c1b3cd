//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use carlitz_core::verify::{
    exceptional_set, reproduce_table, verify_bang_zsigmondy, verify_feit, Pair, SetName,
};
use carlitz_core::{Poly, SearchBounds};

use common::*;

type Outcome = Result<String, String>;

fn violations(list: Vec<String>) -> Outcome {
    if list.is_empty() {
        Ok("0 violations".into())
    } else {
        let shown: Vec<&String> = list.iter().take(5).collect();
        Err(format!("{} violations, e.g. {shown:?}", list.len()))
    }
}

fn table_rows(which: u32, q: u32, rows: &[TableRowLit]) -> Result<(), String> {
    let f = field(q);
    let table = reproduce_table(which).map_err(|e| e.to_string())?;
    if table.rows.len() != rows.len() {
        return Err(format!(
            "table {which}: {} rows, expected {}",
            table.rows.len(),
            rows.len()
        ));
    }
    for (got, lit) in table.rows.iter().zip(rows) {
        let prime = poly(&f, lit.prime);
        let m = poly(&f, lit.m);
        let factors: Vec<(Poly, u32)> =
            lit.factors.iter().map(|(p, e)| (poly(&f, p), *e)).collect();
        let got_factors: Vec<(Poly, u32)> = got
            .factorization
            .iter()
            .map(|fp| (fp.prime.clone(), fp.exponent))
            .collect();
        let witnesses: BTreeSet<Poly> = lit.witnesses.iter().map(|w| poly(&f, w)).collect();
        let got_witnesses: BTreeSet<Poly> = got.witnesses.iter().map(|w| w.value.clone()).collect();
        if got.prime != prime || got.m != m || got_factors != factors || got_witnesses != witnesses
        {
            return Err(format!("table {which}: row {} differs: {got:?}", lit.prime));
        }
        if !got.zsigmondy.is_empty() {
            return Err(format!(
                "table {which}: row {} has Zsigmondy primes",
                lit.prime
            ));
        }
    }
    Ok(())
}

fn ac1() -> Outcome {
    table_rows(2, 3, &TABLE2)?;
    table_rows(3, 4, &TABLE3)?;
    Ok("7 rows match".into())
}

fn bang(q: u32, max_m: usize, max_u: usize) -> Outcome {
    let f = field(q);
    let report = verify_bang_zsigmondy(&f, &SearchBounds::new(q, max_m, max_u), 1)
        .map_err(|e| e.to_string())?;
    let found = report.exception_pairs();
    let expected = within(bang_literal(&f), max_m, max_u);
    if found == expected && report.matches {
        Ok(format!("{} exceptions", found.len()))
    } else {
        Err(format!("found {found:?}, expected {expected:?}"))
    }
}

fn ac5() -> Outcome {
    let mut summary = Vec::new();
    for (q, max_m) in [(3, 3), (4, 2), (5, 2)] {
        let f = field(q);
        let report =
            verify_feit(&f, &SearchBounds::new(q, max_m, 1), 0).map_err(|e| e.to_string())?;
        let found = report.exception_pairs();
        let expected = within(feit_literal(&f), max_m, 1);
        if found != expected || !report.matches {
            let extra: Vec<&Pair> = found.difference(&expected).collect();
            let missing: Vec<&Pair> = expected.difference(&found).collect();
            return Err(format!("q={q}: extra {extra:?}, missing {missing:?}"));
        }
        summary.push(format!("q={q}: {}", found.len()));
    }
    Ok(summary.join(", "))
}

fn ac6() -> Outcome {
    let cases = [
        (SetName::X3, 3),
        (SetName::X4, 3),
        (SetName::X5, 3),
        (SetName::X6, 5),
        (SetName::X8, 3),
        (SetName::X9, 4),
        (SetName::X10, 3),
    ];
    for (name, q) in cases {
        let f = field(q);
        let got: BTreeSet<Pair> = exceptional_set(name, &f, None)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        let want = set_literal(name, &f);
        if got != want {
            return Err(format!("{name}: got {got:?}, expected {want:?}"));
        }
    }
    Ok("7 sets match".into())
}

fn ac7() -> Outcome {
    let mut all = Vec::new();
    for q in [3, 4, 5] {
        all.extend(degree_law_violations(q, 4, 2));
        all.extend(nonvanishing_violations(q, 3, 2));
    }
    violations(all)
}

fn ac8() -> Outcome {
    let mut all = ring_action_violations();
    all.extend(product_formula_violations());
    all.extend(functional_identity_violations());
    all.extend(eisenstein_violations());
    all.extend(fermat_violations());
    violations(all)
}

fn ac9() -> Outcome {
    let mut all = annihilator_oracle_violations();
    all.extend(eval_mod_oracle_violations(100));
    violations(all)
}

fn ac10() -> Outcome {
    violations(luneburg_violations())
}

fn ac11() -> Outcome {
    let runs = [(3, 3, 1), (4, 2, 1), (5, 2, 1), (3, 2, 2)];
    for (q, max_m, max_u) in runs {
        let f = field(q);
        let bounds = SearchBounds::new(q, max_m, max_u);
        for workers in [2, 4, 8] {
            for feit in [false, true] {
                let run = |w| {
                    let r = if feit {
                        verify_feit(&f, &bounds, w)
                    } else {
                        verify_bang_zsigmondy(&f, &bounds, w)
                    };
                    serde_json::to_string(&r.map_err(|e| e.to_string())?).map_err(|e| e.to_string())
                };
                if run(1)? != run(workers)? {
                    return Err(format!("q={q} workers={workers} feit={feit}: JSON differs"));
                }
            }
        }
    }
    Ok("byte-identical across 1/2/4/8 workers".into())
}

struct Criterion {
    id: &'static str,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            id: "AC1",
            name: "table reproduction",
            budget: Some(secs(1)),
            run: ac1,
        },
        Criterion {
            id: "AC2",
            name: "Bang-Zsigmondy q=3",
            budget: Some(secs(60)),
            run: || bang(3, 3, 2),
        },
        Criterion {
            id: "AC3",
            name: "Bang-Zsigmondy q=4",
            budget: Some(secs(60)),
            run: || bang(4, 2, 1),
        },
        Criterion {
            id: "AC4",
            name: "non-exceptional control q=5",
            budget: Some(secs(60)),
            run: || bang(5, 2, 1),
        },
        Criterion {
            id: "AC5",
            name: "large Zsigmondy q=3,4,5",
            budget: Some(secs(300)),
            run: ac5,
        },
        Criterion {
            id: "AC6",
            name: "exceptional-set recomputation",
            budget: Some(secs(300)),
            run: ac6,
        },
        Criterion {
            id: "AC7",
            name: "degree laws",
            budget: None,
            run: ac7,
        },
        Criterion {
            id: "AC8",
            name: "algebraic laws",
            budget: None,
            run: ac8,
        },
        Criterion {
            id: "AC9",
            name: "oracle equivalence",
            budget: None,
            run: ac9,
        },
        Criterion {
            id: "AC10",
            name: "Luneburg structure",
            budget: None,
            run: ac10,
        },
        Criterion {
            id: "AC11",
            name: "determinism",
            budget: None,
            run: ac11,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.budget) {
            (Ok(_), Some(budget)) if elapsed > budget => Err(format!("over budget {budget:?}")),
            (o, _) => o,
        };
        let budget = c
            .budget
            .map_or(String::new(), |b| format!(" / budget {b:?}"));
        match outcome {
            Ok(detail) => println!(
                "[PASS] {} {}: {detail} ({elapsed:.2?}{budget})",
                c.id, c.name
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "[FAIL] {} {}: {detail} ({elapsed:.2?}{budget})",
                    c.id, c.name
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
