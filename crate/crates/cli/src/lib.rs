//! The `carlitz` command line: argument handling, dispatch and formatting.
//!
//! [`run`] never touches stdout or the filesystem; `main` prints the
//! returned [`Output`] and honours `--out`.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use carlitz_core::polyring::{euler_phi, set_seed_salt};
use carlitz_core::verify::{SetReport, Table};
use carlitz_core::zsigmondy::{LargePrime, ZsigmondyReport};
use carlitz_core::{
    carlitz_annihilator, carlitz_eval, carlitz_eval_mod, classify, cyclotomic_eval,
    cyclotomic_poly, large_zsigmondy_primes, parse_poly, reproduce_table, verify_bang_zsigmondy,
    verify_feit, zsigmondy_primes, ExceptionReport, FieldSpec, Poly, SearchBounds, SetName,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

/// Environment variable that salts the factorization PRNG.
pub const SEED_VAR: &str = "CARLITZ_SEED";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    /// Destination requested with `--out`, if any.
    pub out_path: Option<String>,
}

impl Output {
    fn ok(stdout: String, out_path: Option<String>) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
            out_path,
        }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Output {
            code,
            stdout: String::new(),
            stderr,
            out_path: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "carlitz",
    version,
    about = "Carlitz module arithmetic and Zsigmondy-type searches over F_q[T]"
)]
struct Cli {
    /// Field order (a prime power)
    #[arg(long, global = true, conflicts_with_all = ["p", "s"])]
    q: Option<u32>,
    /// Field characteristic
    #[arg(long, global = true)]
    p: Option<u32>,
    /// Extension degree (default 1)
    #[arg(long, global = true, requires = "p")]
    s: Option<u32>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for `verify` (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Write the result to PATH instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// C_m(u)
    Carlitz { m: String, u: String },
    /// C_m(u) mod M
    CarlitzMod {
        m: String,
        u: String,
        modulus: String,
    },
    /// Psi_m(x), or Psi_m(u) when u is given
    Cyclotomic { m: String, u: Option<String> },
    /// Euler totient analogue Phi(m)
    Phi { m: String },
    /// Carlitz annihilator P_{u,p}
    Annihilator {
        u: String,
        #[arg(value_name = "P")]
        prime: String,
    },
    /// Zsigmondy primes for (u, m)
    Zsigmondy { u: String, m: String },
    /// Large Zsigmondy primes for (u, m)
    Large { u: String, m: String },
    /// Full classification of (u, m)
    Classify { u: String, m: String },
    /// Exhaustive theorem check over bounded degrees
    Verify {
        theorem: TheoremArg,
        #[arg(long)]
        max_deg_m: usize,
        #[arg(long)]
        max_deg_u: usize,
    },
    /// Reproduce table 2 (q = 3) or table 3 (q = 4)
    Table {
        #[arg(value_parser = clap::value_parser!(u32).range(2..=3))]
        which: u32,
    },
    /// Recompute an exceptional set X3..X10
    Xset {
        name: String,
        /// Largest exponent scanned for X3
        #[arg(long)]
        max_s: Option<u32>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    Bang,
    Feit,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<carlitz_core::Error> for Failure {
    fn from(e: carlitz_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<carlitz_core::PolyError> for Failure {
    fn from(e: carlitz_core::PolyError) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

/// Result of a command in both output formats, and whether a verification
/// matched.
struct Rendered {
    json: String,
    text: String,
    matched: bool,
}

impl Rendered {
    fn new<T: serde::Serialize>(value: &T, text: String) -> Self {
        Rendered {
            json: serde_json::to_string_pretty(value).expect("reports serialize"),
            text,
            matched: true,
        }
    }
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, S>(argv: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output::ok(text, None)
            } else {
                Output::fail(code, text)
            };
        }
    };
    if let Ok(seed) = std::env::var(SEED_VAR) {
        match seed.trim().parse::<u64>() {
            Ok(salt) => set_seed_salt(salt),
            Err(_) => {
                return Output::fail(
                    EXIT_USAGE,
                    format!("error: {SEED_VAR} must be an unsigned integer"),
                )
            }
        }
    }
    match dispatch(&cli) {
        Ok(r) => {
            let mut stdout = match cli.format {
                Format::Json => r.json,
                Format::Text => r.text,
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            let mut out = Output::ok(stdout, cli.out.clone());
            if !r.matched {
                out.code = EXIT_MISMATCH;
            }
            out
        }
        Err(Failure::Usage(msg)) => Output::fail(EXIT_USAGE, format!("error: {msg}")),
        Err(Failure::Domain(msg)) => Output::fail(EXIT_DOMAIN, format!("error: {msg}")),
    }
}

fn field(cli: &Cli) -> Res<FieldSpec> {
    let spec = match (cli.q, cli.p) {
        (Some(q), _) => {
            if carlitz_core::ffield::prime_power(q).is_none() {
                return Err(Failure::Usage(format!("q = {q} is not a prime power")));
            }
            FieldSpec::from_q(q)
        }
        (None, Some(p)) => FieldSpec::new(p, cli.s.unwrap_or(1)),
        (None, None) => {
            return Err(Failure::Usage(
                "a field is required: pass --q N or --p P [--s S]".into(),
            ))
        }
    };
    spec.map_err(|e| Failure::Usage(e.to_string()))
}

/// Like [`field`], but falls back to `default` when no field flag was given
/// and requires the given field to have order `default`.
fn fixed_field(cli: &Cli, default: u32, what: &str) -> Res<FieldSpec> {
    if cli.q.is_none() && cli.p.is_none() {
        return FieldSpec::from_q(default).map_err(|e| Failure::Domain(e.to_string()));
    }
    let f = field(cli)?;
    if f.q() != default {
        return Err(Failure::Domain(format!(
            "{what} requires q = {default}, got q = {}",
            f.q()
        )));
    }
    Ok(f)
}

fn poly(f: &FieldSpec, name: &str, text: &str) -> Res<Poly> {
    parse_poly(text, f).map_err(|e| Failure::Usage(format!("cannot parse {name} '{text}': {e}")))
}

fn monic(f: &FieldSpec, name: &str, text: &str) -> Res<Poly> {
    let p = poly(f, name, text)?;
    if p.is_zero() || !p.is_monic() {
        return Err(Failure::Domain(format!(
            "{name} must be monic and nonzero, got {p}"
        )));
    }
    Ok(p)
}

fn list(items: &[Poly]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn large_text(items: &[LargePrime]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items
            .iter()
            .map(|l| format!("{} ({})", l.prime, l.reason))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn dispatch(cli: &Cli) -> Res<Rendered> {
    match &cli.command {
        Command::Carlitz { m, u } => {
            let f = field(cli)?;
            let (m, u) = (poly(&f, "m", m)?, poly(&f, "u", u)?);
            let value = carlitz_eval(&m, &u);
            Ok(Rendered::new(
                &json!({ "q": f.q(), "m": m, "u": u, "value": value }),
                value.to_string(),
            ))
        }
        Command::CarlitzMod { m, u, modulus } => {
            let f = field(cli)?;
            let (m, u, modulus) = (
                poly(&f, "m", m)?,
                poly(&f, "u", u)?,
                poly(&f, "modulus", modulus)?,
            );
            let value = carlitz_eval_mod(&m, &u, &modulus)?;
            Ok(Rendered::new(
                &json!({ "q": f.q(), "m": m, "u": u, "modulus": modulus, "value": value }),
                value.to_string(),
            ))
        }
        Command::Cyclotomic { m, u } => {
            let f = field(cli)?;
            let m = monic(&f, "m", m)?;
            match u {
                None => {
                    let psi = cyclotomic_poly(&m)?;
                    Ok(Rendered::new(
                        &json!({ "q": f.q(), "m": m, "polynomial": psi }),
                        psi.to_string(),
                    ))
                }
                Some(u) => {
                    let u = poly(&f, "u", u)?;
                    let value = cyclotomic_eval(&m, &u)?;
                    Ok(Rendered::new(
                        &json!({ "q": f.q(), "m": m, "u": u, "value": value }),
                        value.to_string(),
                    ))
                }
            }
        }
        Command::Phi { m } => {
            let f = field(cli)?;
            let m = poly(&f, "m", m)?;
            let phi = euler_phi(&m)?;
            Ok(Rendered::new(
                &json!({ "q": f.q(), "m": m, "phi": phi }),
                phi.to_string(),
            ))
        }
        Command::Annihilator { u, prime } => {
            let f = field(cli)?;
            let (u, p) = (poly(&f, "u", u)?, poly(&f, "p", prime)?);
            let ann = carlitz_annihilator(&u, &p)?;
            Ok(Rendered::new(
                &json!({ "q": f.q(), "u": u, "prime": p, "annihilator": ann }),
                ann.to_string(),
            ))
        }
        Command::Zsigmondy { u, m } => {
            let f = field(cli)?;
            let (u, m) = (monic(&f, "u", u)?, monic(&f, "m", m)?);
            let primes = zsigmondy_primes(&u, &m)?;
            Ok(Rendered::new(
                &json!({ "q": f.q(), "u": u, "m": m, "zsigmondy_primes": primes }),
                list(&primes),
            ))
        }
        Command::Large { u, m } => {
            let f = field(cli)?;
            let (u, m) = (monic(&f, "u", u)?, monic(&f, "m", m)?);
            let large = large_zsigmondy_primes(&u, &m)?;
            Ok(Rendered::new(
                &json!({ "q": f.q(), "u": u, "m": m, "large": large }),
                large_text(&large),
            ))
        }
        Command::Classify { u, m } => {
            let f = field(cli)?;
            let (u, m) = (poly(&f, "u", u)?, poly(&f, "m", m)?);
            let report = classify(&u, &m)?;
            Ok(Rendered::new(&report, classify_text(&report)))
        }
        Command::Verify {
            theorem,
            max_deg_m,
            max_deg_u,
        } => {
            let f = field(cli)?;
            let bounds = SearchBounds::new(f.q(), *max_deg_m, *max_deg_u);
            let report = match theorem {
                TheoremArg::Bang => verify_bang_zsigmondy(&f, &bounds, cli.workers)?,
                TheoremArg::Feit => verify_feit(&f, &bounds, cli.workers)?,
            };
            Ok(Rendered {
                matched: report.matches,
                ..Rendered::new(&report, verify_text(&report))
            })
        }
        Command::Table { which } => {
            fixed_field(
                cli,
                if *which == 2 { 3 } else { 4 },
                &format!("table {which}"),
            )?;
            let table = reproduce_table(*which)?;
            Ok(Rendered::new(&table, table_text(&table)))
        }
        Command::Xset { name, max_s } => {
            let name: SetName = name
                .parse()
                .map_err(|e: carlitz_core::Error| Failure::Usage(e.to_string()))?;
            let f = match name.required_q() {
                Some(q) => fixed_field(cli, q, &name.to_string())?,
                None => field(cli)?,
            };
            if max_s.is_some() && name != SetName::X3 {
                return Err(Failure::Usage("--max-s only applies to X3".into()));
            }
            let report = SetReport::compute(name, &f, *max_s)?;
            Ok(Rendered::new(&report, set_text(&report)))
        }
    }
}

fn classify_text(r: &ZsigmondyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "q: {}", r.q);
    let _ = writeln!(s, "u: {}", r.u);
    let _ = writeln!(s, "m: {}", r.m);
    if let Some(psi) = &r.psi_value {
        let _ = writeln!(s, "Psi_m(u): {psi}");
    }
    let join = |v: Vec<String>| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.join(", ")
        }
    };
    let _ = writeln!(
        s,
        "zsigmondy: {}",
        join(r.zsigmondy_primes.iter().map(|p| p.to_string()).collect())
    );
    let _ = writeln!(
        s,
        "large: {}",
        join(
            r.large
                .iter()
                .map(|l| format!("{} ({})", l.prime, l.reason))
                .collect()
        )
    );
    let nz = r
        .non_zsigmondy_factors
        .iter()
        .map(|n| format!("{} (annihilator {}, s = {})", n.prime, n.annihilator, n.s))
        .collect();
    let _ = writeln!(s, "non-zsigmondy factors: {}", join(nz));
    let _ = write!(s, "m+1 unique zsigmondy prime: {}", r.m_plus_one_unique);
    s
}

fn verify_text(r: &ExceptionReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "theorem: {}", r.theorem);
    let _ = writeln!(
        s,
        "q: {}, deg m <= {}, deg u <= {}",
        r.q, r.bounds.max_deg_m, r.bounds.max_deg_u
    );
    let _ = writeln!(s, "exceptions: {}", r.exceptions.len());
    for e in &r.exceptions {
        let _ = writeln!(s, "  ({}, {})", e.u, e.m);
    }
    let _ = writeln!(s, "expected: {}", r.expected.len());
    for p in &r.expected {
        let _ = writeln!(s, "  ({}, {})", p.u, p.m);
    }
    let _ = write!(s, "match: {}", r.matches);
    s
}

fn factor_text(prime: &Poly, e: u32) -> String {
    let base = if prime.to_string().contains('+') {
        format!("({prime})")
    } else {
        prime.to_string()
    };
    if e == 1 {
        base
    } else {
        format!("{base}^{e}")
    }
}

fn table_text(t: &Table) -> String {
    let mut s = String::new();
    let _ = write!(s, "table {} (q = {})", t.table, t.q);
    for row in &t.rows {
        let fac: Vec<String> = row
            .factorization
            .iter()
            .map(|fp| factor_text(&fp.prime, fp.exponent))
            .collect();
        let [a, b] = &row.witnesses;
        let _ = write!(
            s,
            "\np = {}: m = {}, C_m(1) = {} = {}; C_{}(1) = {}, C_{}(1) = {}; zsigmondy: {}",
            row.prime,
            row.m,
            row.carlitz_value,
            fac.join("*"),
            factor_text(&a.n, 1),
            a.value,
            factor_text(&b.n, 1),
            b.value,
            if row.zsigmondy.is_empty() {
                "none".into()
            } else {
                list(&row.zsigmondy).replace('\n', ", ")
            },
        );
    }
    s
}

fn set_text(r: &SetReport) -> String {
    let mut s = String::new();
    let _ = write!(s, "{} (q = {}", r.set, r.q);
    if let Some(max_s) = r.max_s {
        let _ = write!(s, ", s <= {max_s}");
    }
    let _ = write!(s, "): {} members", r.members.len());
    for p in &r.members {
        let _ = write!(s, "\n({}, {})", p.u, p.m);
    }
    s
}
