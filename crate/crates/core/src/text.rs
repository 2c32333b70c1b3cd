//! Text form of field elements and polynomials.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := integer | 'T' | 'w' | '(' expr ')'
//! ```
//!
//! Integers are residues mod `p` and must be below `p`; `w` is the generator of
//! a proper extension field. The printer writes terms by decreasing degree,
//! drops zero terms, unit coefficients and `^1`, and parenthesizes
//! coefficients that have more than one term: `(w+1)*T^2+w`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::ffield::{FieldElement, FieldSpec};
use crate::polyring::Poly;

/// Largest exponent accepted by the parser.
pub const MAX_EXPONENT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected '{ch}' at position {pos}")]
    Unexpected { pos: usize, ch: char },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("coefficient {value} is not a residue mod {p}")]
    CoefficientOutOfRange { value: String, p: u32 },
    #[error("unknown symbol '{0}'")]
    UnknownSymbol(char),
    #[error("exponent {0} is too large")]
    ExponentTooLarge(String),
    #[error("expected a field element, found a polynomial in T")]
    NotConstant,
}

struct Parser<'a> {
    field: &'a FieldSpec,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<char> {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn unexpected(&self) -> ParseError {
        match self.chars.get(self.pos) {
            Some(&ch) => ParseError::Unexpected { pos: self.pos, ch },
            None => ParseError::UnexpectedEnd,
        }
    }

    fn integer(&mut self) -> String {
        let mut digits = String::new();
        while let Some(c) = self.chars.get(self.pos).filter(|c| c.is_ascii_digit()) {
            digits.push(*c);
            self.pos += 1;
        }
        digits
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = if self.peek() == Some('-') {
            self.bump();
            -self.term()?
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c.is_ascii_digit() || c == '(' || c.is_alphabetic() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        self.peek();
        let digits = self.integer();
        if digits.is_empty() {
            return Err(self.unexpected());
        }
        match digits.parse::<u64>() {
            Ok(e) if e <= MAX_EXPONENT => Ok(base.pow(e)),
            _ => Err(ParseError::ExponentTooLarge(digits)),
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let f = self.field;
        match self.peek() {
            None => Err(ParseError::UnexpectedEnd),
            Some(c) if c.is_ascii_digit() => {
                let digits = self.integer();
                match digits.parse::<u32>() {
                    Ok(v) if v < f.p() => Ok(Poly::constant(f, v as u8)),
                    _ => Err(ParseError::CoefficientOutOfRange {
                        value: digits,
                        p: f.p(),
                    }),
                }
            }
            Some('T') => {
                self.bump();
                Ok(Poly::t(f))
            }
            Some('w') if !f.is_prime_field() => {
                self.bump();
                Ok(Poly::constant(f, f.generator().value()))
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.unexpected());
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_alphabetic() => Err(ParseError::UnknownSymbol(c)),
            Some(_) => Err(self.unexpected()),
        }
    }
}

/// Parses a polynomial in `T` over `field`.
pub fn parse_poly(text: &str, field: &FieldSpec) -> Result<Poly, ParseError> {
    let mut parser = Parser {
        field,
        chars: text.chars().collect(),
        pos: 0,
    };
    if parser.peek().is_none() {
        return Err(ParseError::Empty);
    }
    let poly = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.unexpected());
    }
    Ok(poly)
}

/// Parses a field element such as `2*w+1`.
pub fn parse_element(text: &str, field: &FieldSpec) -> Result<FieldElement, ParseError> {
    let poly = parse_poly(text, field)?;
    if poly.degree().unwrap_or(0) > 0 {
        return Err(ParseError::NotConstant);
    }
    Ok(field
        .element(poly.coeff(0) as u32)
        .expect("coefficient is in range"))
}

/// Canonical text of an encoded field element.
pub fn element_string(field: &FieldSpec, a: u8) -> String {
    if field.is_prime_field() {
        return a.to_string();
    }
    let terms: Vec<String> = field
        .digits(a)
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| monomial_string(&c.to_string(), "w", k))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// `c*var^k` with the usual omissions; `coeff` is parenthesized when it has
/// more than one term.
fn monomial_string(coeff: &str, var: &str, k: usize) -> String {
    let power = match k {
        0 => return coeff.to_string(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    if coeff == "1" {
        power
    } else if coeff.contains('+') {
        format!("({coeff})*{power}")
    } else {
        format!("{coeff}*{power}")
    }
}

/// Joins the nonzero terms of a dense coefficient sequence, highest first.
pub(crate) fn dense_string<C>(
    coeffs: &[C],
    var: &str,
    show: impl Fn(&C) -> Option<String>,
) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter_map(|(k, c)| show(c).map(|s| monomial_string(&s, var, k)))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&element_string(self.spec(), self.value()))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.field();
        let s = dense_string(self.coeffs(), "T", |&c| {
            (c != 0).then(|| element_string(field, c))
        });
        f.write_str(&s)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
