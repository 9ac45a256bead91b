//! Expression language for symmetric functions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | factor
//! factor := atom | atom '@[' expr ']' | '(' expr ')' | integer
//! atom   := ('s'|'h'|'e'|'p'|'m'|'sdag'|'L'|'Hseries'|'Lseries') ['[' int-list ']']
//! ```
//!
//! Whitespace is ignored between tokens. Basis atoms take a partition,
//! `L` takes a single positive integer, and the series take no brackets.

use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use spst_core::plethysm::{lyndon, plethysm, series, Series};
use spst_core::transitions::{schur_to_stable_specht, stable_specht_to_schur, StableSpechtExpansion};
use spst_core::{Basis, Partition, Rational, SymFunc};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtomKind {
    Schur,
    Homogeneous,
    Elementary,
    Power,
    Monomial,
    StableSpecht,
    Lyndon,
    HSeries,
    LSeries,
}

impl AtomKind {
    const ALL: [AtomKind; 9] = [
        AtomKind::StableSpecht,
        AtomKind::HSeries,
        AtomKind::LSeries,
        AtomKind::Schur,
        AtomKind::Homogeneous,
        AtomKind::Elementary,
        AtomKind::Power,
        AtomKind::Monomial,
        AtomKind::Lyndon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AtomKind::Schur => "s",
            AtomKind::Homogeneous => "h",
            AtomKind::Elementary => "e",
            AtomKind::Power => "p",
            AtomKind::Monomial => "m",
            AtomKind::StableSpecht => "sdag",
            AtomKind::Lyndon => "L",
            AtomKind::HSeries => "Hseries",
            AtomKind::LSeries => "Lseries",
        }
    }

    fn takes_index(self) -> bool {
        !matches!(self, AtomKind::HSeries | AtomKind::LSeries)
    }

    fn basis(self) -> Option<Basis> {
        match self {
            AtomKind::Schur => Some(Basis::Schur),
            AtomKind::Homogeneous => Some(Basis::Homogeneous),
            AtomKind::Elementary => Some(Basis::Elementary),
            AtomKind::Power => Some(Basis::Power),
            AtomKind::Monomial => Some(Basis::Monomial),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub enum ExprKind {
    Int(BigInt),
    /// `index` is empty for the series.
    Atom { kind: AtomKind, index: Partition },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Plethysm(Box<Expr>, Box<Expr>),
}

/// A node with the byte range of its source text. Equality ignores spans.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Range<usize>,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        use ExprKind::*;
        match (&self.kind, &other.kind) {
            (Int(a), Int(b)) => a == b,
            (Atom { kind: k1, index: i1 }, Atom { kind: k2, index: i2 }) => k1 == k2 && i1 == i2,
            (Neg(a), Neg(b)) => a == b,
            (Add(a, b), Add(c, d)) | (Sub(a, b), Sub(c, d)) | (Mul(a, b), Mul(c, d)) | (Plethysm(a, b), Plethysm(c, d)) => {
                a == c && b == d
            }
            _ => false,
        }
    }
}

impl Eq for Expr {}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {offset}: expected {}", expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: input.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(&["'+'", "'-'", "'*'", "end of input"]));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&mut self, expected: &[&'static str]) -> ParseError {
        self.skip_ws();
        ParseError { offset: self.pos, expected: expected.to_vec() }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8, what: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[what]))
        }
    }

    fn node(kind: ExprKind, start: usize, end: usize) -> Expr {
        Expr { kind, span: start..end }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.term()?;
        loop {
            let op = match self.peek() {
                Some(b'+') => b'+',
                Some(b'-') => b'-',
                _ => return Ok(left),
            };
            self.pos += 1;
            let right = self.term()?;
            let (start, end) = (left.span.start, right.span.end);
            let kind = if op == b'+' { ExprKind::Add(left.into(), right.into()) } else { ExprKind::Sub(left.into(), right.into()) };
            left = Self::node(kind, start, end);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.unary()?;
        while self.eat(b'*') {
            let right = self.unary()?;
            let (start, end) = (left.span.start, right.span.end);
            left = Self::node(ExprKind::Mul(left.into(), right.into()), start, end);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(b'-') {
            let start = self.pos;
            self.pos += 1;
            let inner = self.unary()?;
            let end = inner.span.end;
            return Ok(Self::node(ExprKind::Neg(inner.into()), start, end));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        const FACTOR: &[&str] = &["integer", "'('", "'-'", "atom"];
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(self.error(FACTOR)),
        };
        if self.eat(b'(') {
            let inner = self.expr()?;
            self.expect(b')', "')'")?;
            let end = self.pos;
            return Ok(Expr { kind: inner.kind, span: start..end });
        }
        if self.src[start].is_ascii_digit() {
            let n = self.integer()?;
            return Ok(Self::node(ExprKind::Int(n), start, self.pos));
        }
        let kind = self.atom_name().ok_or_else(|| self.error(FACTOR))?;
        let index = if kind.takes_index() { self.index(kind)? } else { Partition::empty() };
        let atom = Self::node(ExprKind::Atom { kind, index }, start, self.pos);
        if self.peek() == Some(b'@') {
            self.pos += 1;
            self.expect(b'[', "'['")?;
            let inner = self.expr()?;
            self.expect(b']', "']'")?;
            let end = self.pos;
            return Ok(Self::node(ExprKind::Plethysm(atom.into(), inner.into()), start, end));
        }
        Ok(atom)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&["integer"]));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii").parse().expect("digits"))
    }

    fn atom_name(&mut self) -> Option<AtomKind> {
        let rest = &self.src[self.pos..];
        let ident_len = rest.iter().take_while(|c| c.is_ascii_alphanumeric() || **c == b'_').count();
        let ident = &rest[..ident_len];
        let kind = AtomKind::ALL.into_iter().find(|k| k.name().as_bytes() == ident)?;
        self.pos += ident_len;
        Some(kind)
    }

    fn index(&mut self, kind: AtomKind) -> Result<Partition, ParseError> {
        self.expect(b'[', "'['")?;
        let mut parts: Vec<usize> = Vec::new();
        let mut last_offset = self.pos;
        if !self.eat(b']') {
            loop {
                self.skip_ws();
                last_offset = self.pos;
                let n = self.integer()?;
                let value = usize::try_from(n).ok().filter(|&v| v > 0);
                match value {
                    Some(v) if parts.last().is_none_or(|&prev| prev >= v) => parts.push(v),
                    _ => {
                        self.pos = last_offset;
                        return Err(self.error(&["positive part no larger than the previous one"]));
                    }
                }
                if self.eat(b']') {
                    break;
                }
                self.expect(b',', "',' or ']'")?;
            }
        }
        if kind == AtomKind::Lyndon && parts.len() != 1 {
            self.pos = last_offset;
            return Err(self.error(&["a single positive integer"]));
        }
        Ok(Partition::new(parts).expect("validated parts"))
    }
}

const PREC_SUM: u8 = 1;
const PREC_PRODUCT: u8 = 2;
const PREC_UNARY: u8 = 3;
const PREC_ATOM: u8 = 4;

fn precedence(e: &Expr) -> u8 {
    match e.kind {
        ExprKind::Add(..) | ExprKind::Sub(..) => PREC_SUM,
        ExprKind::Mul(..) => PREC_PRODUCT,
        ExprKind::Neg(..) => PREC_UNARY,
        _ => PREC_ATOM,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if precedence(e) < min {
        write!(f, "({})", e)
    } else {
        write!(f, "{}", e)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Int(n) => write!(f, "{}", n),
            ExprKind::Atom { kind, index } => {
                if kind.takes_index() {
                    write!(f, "{}{}", kind.name(), index)
                } else {
                    f.write_str(kind.name())
                }
            }
            ExprKind::Neg(a) => {
                f.write_str("-")?;
                write_at(f, a, PREC_UNARY)
            }
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
                write_at(f, a, PREC_SUM)?;
                f.write_str(if matches!(self.kind, ExprKind::Add(..)) { " + " } else { " - " })?;
                write_at(f, b, PREC_PRODUCT)
            }
            ExprKind::Mul(a, b) => {
                write_at(f, a, PREC_PRODUCT)?;
                f.write_str("*")?;
                write_at(f, b, PREC_UNARY)
            }
            ExprKind::Plethysm(a, b) => write!(f, "{}@[{}]", a, b),
        }
    }
}

/// Output basis of an evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputBasis {
    Schur,
    Power,
    StableSpecht,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Sym(SymFunc),
    StableSpecht(StableSpechtExpansion),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Sym(s) => write!(f, "{}", s),
            Value::StableSpecht(s) => write!(f, "{}", s),
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("at offset {}..{}: {source}", span.start, span.end)]
pub struct EvalError {
    pub span: Range<usize>,
    #[source]
    pub source: spst_core::Error,
}

/// Evaluates `expr` truncated at `cap` and expresses it in `basis`.
pub fn eval(expr: &Expr, cap: usize, basis: OutputBasis) -> Result<Value, EvalError> {
    let f = eval_power(expr, cap)?;
    let whole = 0..expr.span.end;
    Ok(match basis {
        OutputBasis::Power => Value::Sym(f),
        OutputBasis::Schur => Value::Sym(f.to_basis(Basis::Schur)),
        OutputBasis::StableSpecht => Value::StableSpecht(
            schur_to_stable_specht(&f.to_basis(Basis::Schur)).map_err(|source| EvalError { span: whole, source })?,
        ),
    })
}

fn eval_power(e: &Expr, cap: usize) -> Result<SymFunc, EvalError> {
    let err = |source| EvalError { span: e.span.clone(), source };
    Ok(match &e.kind {
        ExprKind::Int(n) => SymFunc::constant(Basis::Power, Rational::from_integer(n.clone()), cap),
        ExprKind::Atom { kind, index } => match kind {
            AtomKind::StableSpecht => {
                let element = StableSpechtExpansion::basis_element(index.clone(), cap);
                stable_specht_to_schur(&element).map_err(err)?.to_power()
            }
            AtomKind::Lyndon => lyndon(index.first()).with_cap(cap),
            AtomKind::HSeries => series(Series::HWithOne, cap),
            AtomKind::LSeries => series(Series::Lyndon, cap),
            k => SymFunc::basis_element(k.basis().expect("basis atom"), index.clone(), cap).to_power(),
        },
        ExprKind::Neg(a) => eval_power(a, cap)?.neg(),
        ExprKind::Add(a, b) => eval_power(a, cap)?.add(&eval_power(b, cap)?),
        ExprKind::Sub(a, b) => eval_power(a, cap)?.sub(&eval_power(b, cap)?),
        ExprKind::Mul(a, b) => eval_power(a, cap)?.multiply(&eval_power(b, cap)?),
        ExprKind::Plethysm(a, b) => plethysm(&eval_power(a, cap)?, &eval_power(b, cap)?),
    })
}
