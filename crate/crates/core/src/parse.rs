//! Textual literal grammars.
//!
//! ```text
//! rational    := ['-'] digits ['/' digits]
//! padic       := 'padic(' rational ';' prime ',' precision ')'
//! quaternion  := signed terms, each `rational`, `rational? 'i'|'j'|'k'`  e.g. 1+2i+0j-3/4k
//! polynomial  := sums/differences of products of numbers, `tN` and `(...)`, with `^` powers
//!                e.g. 3/2*t1^2*t2 + t3
//! matrix      := JSON array of arrays; entries are strings in one of the above grammars or integers
//! ```
//!
//! Every value prints in a canonical form that parses back to the same value.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::matrix::Matrix;
use crate::poly::{MultiIndex, PolyRing, Polynomial};
use crate::ring::{Rationals, Ring};
use crate::scalars::{PadicField, PadicScaled, Quaternion, Quaternions};

const MAX_POWER: u64 = 64;

fn err(pos: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse {
        pos,
        message: message.into(),
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    offset: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src: src.as_bytes(),
            pos: 0,
            offset: 0,
        }
    }

    fn with_offset(src: &'a str, offset: usize) -> Self {
        Self {
            src: src.as_bytes(),
            pos: 0,
            offset,
        }
    }

    fn at(&self) -> usize {
        self.pos + self.offset
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(self.at(), format!("expected '{}'", c as char)))
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(err(self.at(), format!("unexpected '{}'", c as char))),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(self.at(), "expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("validated digits"))
    }

    fn small_uint(&mut self, what: &str) -> Result<u64> {
        let at = self.at();
        let n = self.digits()?;
        u64::try_from(n).map_err(|_| err(at, format!("{what} too large")))
    }

    /// Unsigned `a` or `a/b`.
    fn unsigned_rational(&mut self) -> Result<BigRational> {
        let num = self.digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.at();
            let den = self.digits()?;
            if den.is_zero() {
                return Err(err(at, "zero denominator"));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn signed_rational(&mut self) -> Result<BigRational> {
        let neg = self.eat(b'-');
        let q = self.unsigned_rational()?;
        Ok(if neg { -q } else { q })
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let mut c = Cursor::new(text);
    let q = c.signed_rational()?;
    c.expect_end()?;
    Ok(q)
}

fn parse_padic_at(text: &str, offset: usize) -> Result<PadicScaled> {
    let mut c = Cursor::with_offset(text, offset);
    c.skip_ws();
    if !c.src[c.pos..].starts_with(b"padic") {
        return Err(err(c.at(), "expected 'padic('"));
    }
    c.pos += 5;
    c.expect(b'(')?;
    let x = c.signed_rational()?;
    c.expect(b';')?;
    c.skip_ws();
    let p_at = c.at();
    let p = c.small_uint("prime")?;
    c.expect(b',')?;
    c.skip_ws();
    let n_at = c.at();
    let precision = c.small_uint("precision")?;
    c.expect(b')')?;
    c.expect_end()?;
    let precision = u32::try_from(precision).map_err(|_| err(n_at, "precision overflow"))?;
    PadicScaled::from_rational(&x, p, precision).map_err(|e| match e {
        AlgebraError::NotPrime(_) => err(p_at, e.to_string()),
        other => err(n_at, other.to_string()),
    })
}

pub fn parse_padic(text: &str) -> Result<PadicScaled> {
    parse_padic_at(text, 0)
}

fn parse_quaternion_at(text: &str, offset: usize) -> Result<Quaternion> {
    let mut c = Cursor::with_offset(text, offset);
    let mut q = Quaternion::zero();
    let mut first = true;
    loop {
        let neg = match c.peek() {
            Some(b'+') if !first => {
                c.pos += 1;
                false
            }
            Some(b'-') => {
                c.pos += 1;
                true
            }
            None if !first => break,
            _ if first => false,
            Some(ch) => return Err(err(c.at(), format!("unexpected '{}'", ch as char))),
            None => unreachable!(),
        };
        first = false;
        let coef = match c.peek() {
            Some(d) if d.is_ascii_digit() => c.unsigned_rational()?,
            Some(b'i' | b'j' | b'k') => BigRational::from_integer(1.into()),
            _ => return Err(err(c.at(), "expected a quaternion component")),
        };
        let coef = if neg { -coef } else { coef };
        let slot = match c.src.get(c.pos) {
            Some(b'i') => &mut q.ci,
            Some(b'j') => &mut q.cj,
            Some(b'k') => &mut q.ck,
            _ => &mut q.c1,
        };
        *slot += coef;
        if matches!(c.src.get(c.pos), Some(b'i' | b'j' | b'k')) {
            c.pos += 1;
        }
        if c.peek().is_none() {
            break;
        }
    }
    Ok(q)
}

pub fn parse_quaternion(text: &str) -> Result<Quaternion> {
    if text.trim().is_empty() {
        return Err(err(0, "empty quaternion"));
    }
    parse_quaternion_at(text, 0)
}

/// Largest `N` with `tN` in the text (`t` alone means `t1`).
fn max_variable(text: &str) -> usize {
    let b = text.as_bytes();
    let mut best = 0;
    for (i, &ch) in b.iter().enumerate() {
        if ch != b't' {
            continue;
        }
        let digits: String = b[i + 1..]
            .iter()
            .take_while(|d| d.is_ascii_digit())
            .map(|&d| d as char)
            .collect();
        best = best.max(digits.parse().unwrap_or(1));
    }
    best
}

struct PolyParser<'a> {
    c: Cursor<'a>,
    ring: PolyRing<Rationals>,
}

impl PolyParser<'_> {
    fn expr(&mut self) -> Result<Polynomial<Rationals>> {
        let mut acc = if self.c.eat(b'-') {
            self.term()?.neg()
        } else {
            self.c.eat(b'+');
            self.term()?
        };
        loop {
            if self.c.eat(b'+') {
                let t = self.term()?;
                acc = self.ring.add(&acc, &t);
            } else if self.c.eat(b'-') {
                let t = self.term()?;
                acc = self.ring.sub(&acc, &t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<Rationals>> {
        let mut acc = self.factor()?;
        while self.c.eat(b'*') {
            let f = self.factor()?;
            acc = self.ring.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<Rationals>> {
        let base = self.atom()?;
        if self.c.eat(b'^') {
            let at = self.c.at();
            let e = self.c.small_uint("exponent")?;
            if e > MAX_POWER {
                return Err(err(at, format!("exponent above {MAX_POWER}")));
            }
            return Ok(self.ring.pow(&base, e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<Rationals>> {
        match self.c.peek() {
            Some(b'(') => {
                self.c.pos += 1;
                let e = self.expr()?;
                self.c.expect(b')')?;
                Ok(e)
            }
            Some(b't') => {
                self.c.pos += 1;
                let at = self.c.at();
                let j = if self.c.src.get(self.c.pos).is_some_and(u8::is_ascii_digit) {
                    self.c.small_uint("variable index")? as usize
                } else {
                    1
                };
                self.ring.var(j).map_err(|e| err(at, e.to_string()))
            }
            Some(d) if d.is_ascii_digit() => {
                let q = self.c.unsigned_rational()?;
                Ok(self.ring.constant(q))
            }
            Some(ch) => Err(err(self.c.at(), format!("unexpected '{}'", ch as char))),
            None => Err(err(self.c.at(), "unexpected end of input")),
        }
    }
}

/// Parse a polynomial over Q. `nvars` defaults to the largest variable index used.
pub fn parse_polynomial(text: &str, nvars: Option<usize>) -> Result<Polynomial<Rationals>> {
    parse_polynomial_at(text, nvars, 0)
}

fn parse_polynomial_at(text: &str, nvars: Option<usize>, offset: usize) -> Result<Polynomial<Rationals>> {
    let n = nvars.unwrap_or_else(|| max_variable(text));
    let mut p = PolyParser {
        c: Cursor::with_offset(text, offset),
        ring: PolyRing::new(Rationals, n),
    };
    let f = p.expr()?;
    p.c.expect_end()?;
    Ok(f)
}

/// A parsed CLI value.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Rational(BigRational),
    Padic(PadicScaled),
    Quaternion(Quaternion),
    Polynomial(Polynomial<Rationals>),
    Matrix(MatrixValue),
}

#[derive(Debug, Clone, PartialEq)]
pub enum MatrixValue {
    Rational(Matrix<Rationals>),
    Padic(Matrix<PadicField>),
    Quaternion(Matrix<Quaternions>),
    Polynomial(Matrix<PolyRing<Rationals>>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(q) => write!(f, "{q}"),
            Value::Padic(x) => write!(f, "{x}"),
            Value::Quaternion(q) => write!(f, "{q}"),
            Value::Polynomial(p) => write!(f, "{p}"),
            Value::Matrix(m) => write!(f, "{m}"),
        }
    }
}

impl fmt::Display for MatrixValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixValue::Rational(m) => write!(f, "{m}"),
            MatrixValue::Padic(m) => write!(f, "{m}"),
            MatrixValue::Quaternion(m) => write!(f, "{m}"),
            MatrixValue::Polynomial(m) => write!(f, "{m}"),
        }
    }
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Rational(_) => "rational",
            Value::Padic(_) => "padic",
            Value::Quaternion(_) => "quaternion",
            Value::Polynomial(_) => "polynomial",
            Value::Matrix(_) => "matrix",
        }
    }
}

fn classify_scalar(text: &str, offset: usize) -> Result<Value> {
    let t = text.trim_start();
    let offset = offset + (text.len() - t.len());
    if t.starts_with("padic") {
        return parse_padic_at(t, offset).map(Value::Padic);
    }
    if t.contains('t') {
        let f = parse_polynomial_at(t, None, offset)?;
        return Ok(match f.degree() {
            None | Some(0) => Value::Rational(f.constant_term()),
            _ => Value::Polynomial(f),
        });
    }
    if t.contains(['i', 'j', 'k']) {
        return parse_quaternion_at(t, offset).map(Value::Quaternion);
    }
    let f = parse_polynomial_at(t, Some(0), offset)?;
    Ok(Value::Rational(f.constant_term()))
}

/// Parse any CLI literal: scalar, polynomial, or JSON matrix.
pub fn parse_expr(text: &str) -> Result<Value> {
    if text.trim_start().starts_with('[') {
        return parse_matrix(text).map(Value::Matrix);
    }
    classify_scalar(text, 0)
}

pub fn parse_matrix(text: &str) -> Result<MatrixValue> {
    let json: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| err(e.column().saturating_sub(1), format!("invalid matrix JSON: {e}")))?;
    let rows = json
        .as_array()
        .ok_or_else(|| err(0, "matrix must be an array of rows"))?;
    let n = rows.len();
    if n == 0 {
        return Err(err(0, "empty matrix"));
    }
    let mut cells = Vec::with_capacity(n * n);
    for row in rows {
        let row = row.as_array().ok_or_else(|| err(0, "matrix rows must be arrays"))?;
        if row.len() != n {
            return Err(err(0, format!("matrix must be square ({n}x{n})")));
        }
        for cell in row {
            let v = match cell {
                serde_json::Value::String(s) => classify_scalar(s, 0)?,
                serde_json::Value::Number(k) => {
                    let s = k.to_string();
                    Value::Rational(parse_rational(&s)?)
                }
                _ => return Err(err(0, "matrix entries must be strings or integers")),
            };
            if matches!(v, Value::Matrix(_)) {
                return Err(err(0, "nested matrices are not supported"));
            }
            cells.push(v);
        }
    }
    build_matrix(n, cells)
}

fn build_matrix(n: usize, cells: Vec<Value>) -> Result<MatrixValue> {
    let padic = cells.iter().find_map(|v| match v {
        Value::Padic(x) => Some((x.prime(), x.precision())),
        _ => None,
    });
    let quaternion = cells.iter().any(|v| matches!(v, Value::Quaternion(_)));
    let nvars = cells
        .iter()
        .filter_map(|v| match v {
            Value::Polynomial(p) => Some(p.nvars()),
            _ => None,
        })
        .max();
    let kinds = [padic.is_some(), quaternion, nvars.is_some()]
        .iter()
        .filter(|&&b| b)
        .count();
    if kinds > 1 {
        return Err(err(0, "matrix mixes incompatible entry kinds"));
    }
    let mut it = cells.into_iter();
    if let Some((p, prec)) = padic {
        let field = PadicField::new(p, prec)?;
        let mut entries = Vec::with_capacity(n * n);
        for v in it {
            entries.push(match v {
                Value::Padic(x) if x.prime() == p && x.precision() == prec => x,
                Value::Padic(_) => return Err(err(0, "p-adic entries disagree on prime or precision")),
                Value::Rational(q) => field.element(&q),
                _ => unreachable!(),
            });
        }
        return Ok(MatrixValue::Padic(Matrix::from_fn(field, n, |j, l| {
            entries[j * n + l].clone()
        })));
    }
    if quaternion {
        let entries: Vec<Quaternion> = it
            .map(|v| match v {
                Value::Quaternion(q) => q,
                Value::Rational(q) => Quaternion::real(q),
                _ => unreachable!(),
            })
            .collect();
        return Ok(MatrixValue::Quaternion(Matrix::from_fn(Quaternions, n, |j, l| {
            entries[j * n + l].clone()
        })));
    }
    if let Some(nvars) = nvars {
        let ring = PolyRing::new(Rationals, nvars);
        let entries: Vec<Polynomial<Rationals>> = it
            .map(|v| match v {
                Value::Polynomial(p) => widen(&p, nvars),
                Value::Rational(q) => ring.constant(q),
                _ => unreachable!(),
            })
            .collect();
        return Ok(MatrixValue::Polynomial(Matrix::from_fn(ring, n, |j, l| {
            entries[j * n + l].clone()
        })));
    }
    let entries: Vec<BigRational> = it
        .by_ref()
        .map(|v| match v {
            Value::Rational(q) => q,
            _ => unreachable!(),
        })
        .collect();
    Ok(MatrixValue::Rational(Matrix::from_fn(Rationals, n, |j, l| {
        entries[j * n + l].clone()
    })))
}

/// Re-embed a polynomial into more variables.
fn widen(p: &Polynomial<Rationals>, nvars: usize) -> Polynomial<Rationals> {
    let terms = p.terms().map(|(idx, c)| {
        let mut e = idx.exponents().to_vec();
        e.resize(nvars, 0);
        (MultiIndex::new(e), c.clone())
    });
    Polynomial::from_terms(Rationals, nvars, terms).expect("widened indices match")
}
