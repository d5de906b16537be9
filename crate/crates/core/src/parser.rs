//! Text language for nested radical expressions.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | atom ('^' power)?
//! power := integer | '(' ['-'] integer ['/' integer] ')'
//! atom  := rational | 'root' '(' integer ',' expr ')' | 'sqrt' '(' expr ')' | '(' expr ')'
//! rational := integer ('/' integer)?
//! ```
//!
//! `x^(p/q)` is desugared on the spot into `root(q, x^p)`.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::element::RadicalElement;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rational(Rational),
    Root { degree: u32, body: Box<Expr> },
    Sum(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Quotient(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow { base: Box<Expr>, exponent: i64 },
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Rational(q) => write!(f, "{q}"),
            Expr::Root { degree: 2, body } => write!(f, "sqrt({body})"),
            Expr::Root { degree, body } => write!(f, "root({degree}, {body})"),
            Expr::Sum(a, b) => write!(f, "({a} + {b})"),
            Expr::Difference(a, b) => write!(f, "({a} - {b})"),
            Expr::Product(a, b) => write!(f, "{a} * {b}"),
            Expr::Quotient(a, b) => write!(f, "{a} / ({b})"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Pow { base, exponent } => write!(f, "({base})^({exponent})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                out.push((start, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(Error::Syntax { position: i, message: format!("unexpected character {ch:?}") });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.offset(), message: message.into() })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected integer"),
        }
    }

    fn small_integer(&mut self, what: &str) -> Result<i64> {
        let at = self.offset();
        let n = self.integer()?;
        n.to_i64().ok_or(Error::Syntax { position: at, message: format!("{what} out of range") })
    }

    fn degree(&mut self) -> Result<u32> {
        let at = self.offset();
        let n = self.integer()?;
        match n.to_u32() {
            Some(d) if d >= 2 => Ok(d),
            _ => Err(Error::Syntax { position: at, message: format!("root degree {n} must be an integer >= 2") }),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Sum(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Difference(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = Expr::Product(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    lhs = Expr::Quotient(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let (p, q) = if self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            let negative = if self.peek() == Some(&Tok::Minus) {
                self.pos += 1;
                true
            } else {
                false
            };
            let p = self.small_integer("exponent")?;
            let q = if self.peek() == Some(&Tok::Slash) {
                self.pos += 1;
                let at = self.offset();
                let q = self.small_integer("exponent denominator")?;
                if q == 0 {
                    return Err(Error::Syntax { position: at, message: "zero exponent denominator".into() });
                }
                q
            } else {
                1
            };
            self.expect(Tok::RParen, "')' closing exponent")?;
            (if negative { -p } else { p }, q)
        } else {
            (self.small_integer("exponent")?, 1)
        };
        let power = Expr::Pow { base: Box::new(base), exponent: p };
        if q == 1 {
            Ok(power)
        } else {
            let degree = u32::try_from(q).map_err(|_| Error::Syntax {
                position: self.offset(),
                message: "exponent denominator out of range".into(),
            })?;
            Ok(Expr::Root { degree, body: Box::new(power) })
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Slash) && matches!(self.peek_at(1), Some(Tok::Int(_))) {
                    self.pos += 1;
                    let at = self.offset();
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(Error::Syntax { position: at, message: "zero denominator in literal".into() });
                    }
                    Ok(Expr::Rational(Rational::new(n, d)))
                } else {
                    Ok(Expr::Rational(Rational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "root" => {
                        self.expect(Tok::LParen, "'(' after root")?;
                        let degree = self.degree()?;
                        self.expect(Tok::Comma, "',' after root degree")?;
                        let body = self.expr()?;
                        self.expect(Tok::RParen, "')' closing root")?;
                        Ok(Expr::Root { degree, body: Box::new(body) })
                    }
                    "sqrt" => {
                        self.expect(Tok::LParen, "'(' after sqrt")?;
                        let body = self.expr()?;
                        self.expect(Tok::RParen, "')' closing sqrt")?;
                        Ok(Expr::Root { degree: 2, body: Box::new(body) })
                    }
                    _ => {
                        self.pos -= 1;
                        self.err(format!("unknown identifier {name:?}"))
                    }
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(_) => self.err("expected a number, root, sqrt or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression; errors carry the byte offset of the failure.
pub fn parse(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// `root(degree, radicand)` with a radicand that does not denest syntactically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedClaim {
    pub degree: u32,
    pub radicand: RadicalElement,
}

/// `root(degree, numerator / denominator)` kept in quotient form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientClaim {
    pub degree: u32,
    pub numerator: RadicalElement,
    pub denominator: RadicalElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lowered {
    Element(RadicalElement),
    Nested(NestedClaim),
    Quotient(QuotientClaim),
}

impl Lowered {
    pub fn into_element(self) -> Option<RadicalElement> {
        match self {
            Lowered::Element(e) => Some(e),
            _ => None,
        }
    }
}

/// Folds an expression that contains no unresolvable roots.
pub fn flatten(expr: &Expr) -> Result<RadicalElement> {
    match expr {
        Expr::Rational(q) => Ok(RadicalElement::from_rational(q.clone())),
        Expr::Sum(a, b) => Ok(flatten(a)? + flatten(b)?),
        Expr::Difference(a, b) => Ok(flatten(a)? - flatten(b)?),
        Expr::Product(a, b) => Ok(flatten(a)? * flatten(b)?),
        Expr::Quotient(a, b) => {
            let num = flatten(a)?;
            let den = flatten(b)?;
            Ok(num * den.inverse()?)
        }
        Expr::Neg(a) => Ok(-flatten(a)?),
        Expr::Pow { base, exponent } => flatten(base)?.pow(*exponent),
        Expr::Root { degree, body } => {
            let b = flatten(body)?;
            match b.root_of_term(*degree) {
                Some(r) => r,
                None => Err(Error::NotFlattenable(format!("{expr}"))),
            }
        }
    }
}

/// Lowers an expression to an element, or to a claim when only the
/// outermost root resists flattening.
pub fn lower(expr: &Expr) -> Result<Lowered> {
    let Expr::Root { degree, body } = expr else {
        return flatten(expr).map(Lowered::Element);
    };
    let degree = *degree;
    if let Expr::Quotient(a, b) = body.as_ref() {
        let numerator = flatten(a)?;
        let denominator = flatten(b)?;
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if denominator.term_count() > 1 {
            return Ok(Lowered::Quotient(QuotientClaim { degree, numerator, denominator }));
        }
    }
    let radicand = flatten(body)?;
    if radicand.term_count() <= 1 {
        if let Some(q) = radicand.as_rational() {
            if q.is_negative() && degree % 2 == 0 {
                return Err(Error::Branch(format!("even root of negative rational {q}")));
            }
        }
        let r = radicand.root_of_term(degree).expect("single term");
        return r.map(Lowered::Element);
    }
    Ok(Lowered::Nested(NestedClaim { degree, radicand }))
}

/// Parses and lowers in one step.
pub fn parse_lower(text: &str) -> Result<Lowered> {
    lower(&parse(text)?)
}

/// Parses text that must denote a plain element.
pub fn parse_element(text: &str) -> Result<RadicalElement> {
    flatten(&parse(text)?)
}
