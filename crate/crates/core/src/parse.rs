//! Text syntax for polynomials.
//!
//! Grammar: `+`/`-` chains of products; `*` between factors is optional,
//! `^` raises to a nonnegative integer power, parentheses group. Variables
//! are identifiers, integer coefficients are reduced mod p.
//! Example: `x11*x22 - x12*x21`.

use crate::error::Error;
use crate::poly::Polynomial;
use crate::ring::Ring;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Error {
        Error::Invalid(e.to_string())
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Cursor<'a> {
        Cursor { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.bump();
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, col: self.col, message: message.into() }
    }
}

pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, ParseError> {
    let mut cur = Cursor::new(text);
    let p = parse_expr(ring, &mut cur)?;
    cur.skip_ws();
    if cur.peek().is_some() {
        return Err(cur.error("trailing input"));
    }
    Ok(p)
}

fn parse_expr(ring: &Ring, cur: &mut Cursor) -> Result<Polynomial, ParseError> {
    cur.skip_ws();
    let mut negate = false;
    while let Some(c @ (b'+' | b'-')) = cur.peek() {
        if c == b'-' {
            negate = !negate;
        }
        cur.bump();
        cur.skip_ws();
    }
    let mut acc = parse_product(ring, cur)?;
    if negate {
        acc = acc.neg();
    }
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(b'+') => {
                cur.bump();
                let t = parse_signed_product(ring, cur)?;
                acc = acc.add(&t);
            }
            Some(b'-') => {
                cur.bump();
                let t = parse_signed_product(ring, cur)?;
                acc = acc.sub(&t);
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_signed_product(ring: &Ring, cur: &mut Cursor) -> Result<Polynomial, ParseError> {
    cur.skip_ws();
    let mut negate = false;
    while let Some(c @ (b'+' | b'-')) = cur.peek() {
        if c == b'-' {
            negate = !negate;
        }
        cur.bump();
        cur.skip_ws();
    }
    let p = parse_product(ring, cur)?;
    Ok(if negate { p.neg() } else { p })
}

fn parse_product(ring: &Ring, cur: &mut Cursor) -> Result<Polynomial, ParseError> {
    let mut acc = parse_power(ring, cur)?;
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(b'*') => {
                cur.bump();
                let f = parse_power(ring, cur)?;
                acc = acc.mul(&f);
            }
            // implicit multiplication by juxtaposition
            Some(c) if c == b'(' || c.is_ascii_alphabetic() || c == b'_' || c.is_ascii_digit() => {
                let f = parse_power(ring, cur)?;
                acc = acc.mul(&f);
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_power(ring: &Ring, cur: &mut Cursor) -> Result<Polynomial, ParseError> {
    let base = parse_atom(ring, cur)?;
    cur.skip_ws();
    if cur.peek() == Some(b'^') {
        cur.bump();
        cur.skip_ws();
        let e = parse_uint(cur)?;
        return Ok(base.pow(e));
    }
    Ok(base)
}

fn parse_atom(ring: &Ring, cur: &mut Cursor) -> Result<Polynomial, ParseError> {
    cur.skip_ws();
    match cur.peek() {
        Some(b'(') => {
            cur.bump();
            let inner = parse_expr(ring, cur)?;
            cur.skip_ws();
            if cur.peek() != Some(b')') {
                return Err(cur.error("expected `)`"));
            }
            cur.bump();
            Ok(inner)
        }
        Some(c) if c.is_ascii_digit() => {
            let n = parse_uint(cur)?;
            Ok(ring.constant(ring.field().from_u64(n)))
        }
        Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
            let (line, col) = (cur.line, cur.col);
            let mut name = String::new();
            while let Some(c) = cur.peek() {
                if c.is_ascii_alphanumeric() || c == b'_' {
                    name.push(c as char);
                    cur.bump();
                } else {
                    break;
                }
            }
            match ring.var(&name) {
                Ok(v) => Ok(ring.var_poly(v)),
                Err(_) => Err(ParseError {
                    line,
                    col,
                    message: format!("unknown variable `{name}`"),
                }),
            }
        }
        Some(c) => Err(cur.error(format!("unexpected character `{}`", c as char))),
        None => Err(cur.error("unexpected end of input")),
    }
}

fn parse_uint(cur: &mut Cursor) -> Result<u64, ParseError> {
    let mut n: u64 = 0;
    let mut any = false;
    while let Some(c) = cur.peek() {
        if c.is_ascii_digit() {
            any = true;
            n = n
                .checked_mul(10)
                .and_then(|n| n.checked_add((c - b'0') as u64))
                .ok_or_else(|| cur.error("integer literal too large"))?;
            cur.bump();
        } else {
            break;
        }
    }
    if !any {
        return Err(cur.error("expected an integer"));
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minor() {
        let r = Ring::lex(5, &["x11", "x12", "x21", "x22"]).unwrap();
        let f = parse_polynomial(&r, "x11*x22 - x12*x21").unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f, parse_polynomial(&r, "x11 x22 - x12 x21").unwrap());
    }

    #[test]
    fn parses_parenthesized_products() {
        let r = Ring::lex(3, &["x", "y", "z"]).unwrap();
        let f = parse_polynomial(&r, "(x + y)*(x - y) + y^2").unwrap();
        assert_eq!(f, parse_polynomial(&r, "x^2").unwrap());
        let g = parse_polynomial(&r, "-3x y z^2").unwrap();
        assert!(g.is_zero()); // -3 = 0 mod 3
        let h = parse_polynomial(&r, "-2x").unwrap();
        assert_eq!(h, parse_polynomial(&r, "x").unwrap());
    }

    #[test]
    fn reports_location() {
        let r = Ring::lex(3, &["x"]).unwrap();
        let err = parse_polynomial(&r, "x +\n  q").unwrap_err();
        assert_eq!((err.line, err.col), (2, 3));
        assert!(err.message.contains("unknown variable"));
        assert!(parse_polynomial(&r, "x )").is_err());
        assert!(parse_polynomial(&r, "(x").is_err());
    }

    #[test]
    fn coefficients_reduce_mod_p() {
        let r = Ring::lex(5, &["x"]).unwrap();
        let f = parse_polynomial(&r, "7*x - 12").unwrap();
        assert_eq!(f, parse_polynomial(&r, "2*x + 3").unwrap());
    }
}
