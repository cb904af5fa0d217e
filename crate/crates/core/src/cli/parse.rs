//! Parser for sums of monomials such as `x^5 + y^3 - 2*z*w` or
//! `x1^2 + 3/2 x2*x3^4`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::newton::MonomialSupport;

/// A parsed polynomial: exact coefficients over exponent vectors, indexed by
/// a variable table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialExpression {
    pub source: String,
    pub variables: Vec<String>,
    /// merged terms in order of first appearance, no zero coefficients
    pub terms: Vec<(BigRational, Vec<u32>)>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Naming {
    Letters,
    Indexed(char),
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

type RawTerm = (usize, BigRational, Vec<(String, u32)>);

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos, msg: msg.into() })
    }

    fn describe(&self, pos: usize) -> String {
        match self.src[pos..].chars().next() {
            Some(c) => format!("unexpected '{c}'"),
            None => "unexpected end of input".to_string(),
        }
    }

    fn natural(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.src[start..self.pos].parse().expect("digits"))
    }

    fn coefficient(&mut self) -> Result<Option<BigRational>> {
        let Some(num) = self.natural() else { return Ok(None) };
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let den = match self.natural() {
                Some(d) => d,
                None => return self.err(at, "expected a denominator after '/'"),
            };
            if den.is_zero() {
                return self.err(at, "zero denominator");
            }
            return Ok(Some(BigRational::new(num, den)));
        }
        Ok(Some(BigRational::from_integer(num)))
    }

    fn factor(&mut self) -> Result<(String, u32)> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            Some(b'(') => return self.err(self.pos, "parentheses are not supported; write f as a sum of monomials"),
            _ => return self.err(self.pos, self.describe(self.pos)),
        }
        let name_start = self.pos;
        self.pos += 1;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let name = self.src[name_start..self.pos].to_string();
        if self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
            return self.err(start, format!("variable names are single letters or a letter with an index, got '{name}…'"));
        }
        let mut exp = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            exp = match self.natural() {
                Some(e) => e.try_into().map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?,
                None => {
                    self.skip_ws();
                    return self.err(self.pos, format!("expected an exponent, {}", self.describe(self.pos)));
                }
            };
        }
        Ok((name, exp))
    }

    fn term(&mut self, sign: BigRational) -> Result<RawTerm> {
        self.skip_ws();
        let start = self.pos;
        let coeff = self.coefficient()?;
        let mut factors = Vec::new();
        match (coeff.is_some(), self.peek()) {
            (true, Some(b'*')) => {
                self.pos += 1;
                factors.push(self.factor()?);
            }
            (true, Some(c)) if c.is_ascii_alphabetic() => factors.push(self.factor()?),
            (true, _) => return self.err(start, "constant term: f must vanish at the origin"),
            (false, _) => factors.push(self.factor()?),
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        if factors.iter().all(|(_, e)| *e == 0) {
            return self.err(start, "constant term: f must vanish at the origin");
        }
        Ok((start, sign * coeff.unwrap_or_else(BigRational::one), factors))
    }

    fn expression(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut sign = BigRational::one();
        match self.peek() {
            None => return self.err(self.pos, "empty polynomial"),
            Some(b'-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        terms.push(self.term(sign)?);
        loop {
            match self.peek() {
                None => return Ok(terms),
                Some(b'+') => {
                    self.pos += 1;
                    terms.push(self.term(BigRational::one())?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    terms.push(self.term(-BigRational::one())?);
                }
                Some(_) => return self.err(self.pos, self.describe(self.pos)),
            }
        }
    }
}

fn naming_of(name: &str) -> Naming {
    let mut chars = name.chars();
    let first = chars.next().expect("nonempty");
    if chars.as_str().is_empty() {
        Naming::Letters
    } else {
        Naming::Indexed(first)
    }
}

/// Parses a sum of monomials. `min_vars` pads the variable table when some
/// variables do not occur (indexed names only).
pub fn parse(text: &str, min_vars: Option<usize>) -> Result<PolynomialExpression> {
    let mut p = Parser { src: text, bytes: text.as_bytes(), pos: 0 };
    let raw = p.expression()?;

    let mut naming = None;
    let mut letters: Vec<String> = Vec::new();
    let mut max_index = 0usize;
    for (pos, _, factors) in &raw {
        for (name, _) in factors {
            let kind = naming_of(name);
            if naming.is_some_and(|k| k != kind) {
                return Err(Error::Parse { pos: *pos, msg: "mixed variable naming; use x1..xn or single letters".into() });
            }
            naming = Some(kind);
            match kind {
                Naming::Letters => {
                    if !letters.contains(name) {
                        letters.push(name.clone());
                    }
                }
                Naming::Indexed(_) => {
                    let i: usize = name[1..].parse().map_err(|_| Error::Parse { pos: *pos, msg: "bad index".into() })?;
                    if i == 0 {
                        return Err(Error::Parse { pos: *pos, msg: "variable indices start at 1".into() });
                    }
                    max_index = max_index.max(i);
                }
            }
        }
    }
    let variables: Vec<String> = match naming.expect("at least one factor") {
        Naming::Letters => letters,
        Naming::Indexed(c) => (1..=max_index.max(min_vars.unwrap_or(0))).map(|i| format!("{c}{i}")).collect(),
    };
    let n = variables.len();

    let mut terms: Vec<(BigRational, Vec<u32>)> = Vec::new();
    let mut warnings = Vec::new();
    for (pos, c, factors) in raw {
        let mut exps = vec![0u32; n];
        for (name, e) in factors {
            let i = variables.iter().position(|v| *v == name).expect("variable table");
            exps[i] += e;
        }
        if c.is_zero() {
            warnings.push(format!("term at byte {pos} has coefficient 0 and is dropped from the support"));
            continue;
        }
        match terms.iter_mut().find(|(_, e)| *e == exps) {
            Some(t) => t.0 += c,
            None => terms.push((c, exps)),
        }
    }
    let before = terms.len();
    terms.retain(|(c, _)| !c.is_zero());
    if terms.len() < before {
        warnings.push(format!("{} monomial(s) cancelled and are dropped from the support", before - terms.len()));
    }
    if terms.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "polynomial is zero".into() });
    }
    Ok(PolynomialExpression { source: text.to_string(), variables, terms, warnings })
}

impl PolynomialExpression {
    pub fn n(&self) -> usize {
        self.variables.len()
    }

    /// The exponent vectors, with coefficients kept as strings.
    pub fn support(&self) -> Result<MonomialSupport> {
        let monomials = self.terms.iter().map(|(_, e)| e.iter().map(|&x| x as i64).collect()).collect();
        let mut s = MonomialSupport::new(self.n(), monomials)?;
        s.coefficients = Some(self.terms.iter().map(|(c, _)| c.to_string()).collect());
        Ok(s)
    }
}

impl fmt::Display for PolynomialExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (c, exps)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut first = true;
            if !abs.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for (name, &e) in self.variables.iter().zip(exps) {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                match e {
                    1 => write!(f, "{name}")?,
                    _ => write!(f, "{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}
