//! Polynomial expression parser.
//!
//! Grammar: identifiers `[A-Za-z][A-Za-z0-9_]*`, integer literals, rational
//! literals `p/q`, binary `+ - *`, postfix `^n`, unary minus and parentheses.

use crate::ring::{Polynomial, RingRef};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable {name} at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("division is not allowed in input (position {pos})")]
    Division { pos: usize },
    #[error("literal denominator vanishes in the coefficient field (position {pos})")]
    ZeroDenominator { pos: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Rat(BigInt, BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let b = s.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_alphabetic() {
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(s[start..i].to_string()), start));
            continue;
        }
        if c.is_ascii_digit() {
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = s[start..i].parse().unwrap();
            if i < b.len() && b[i] == b'/' {
                let slash = i;
                i += 1;
                let ds = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                if ds == i {
                    return Err(ParseError::Division { pos: slash });
                }
                let d: BigInt = s[ds..i].parse().unwrap();
                out.push((Tok::Rat(n, d), start));
            } else {
                out.push((Tok::Int(n), start));
            }
            continue;
        }
        let t = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'/' => return Err(ParseError::Division { pos: i }),
            _ => {
                return Err(ParseError::Syntax {
                    pos: i,
                    msg: format!("unexpected character '{}'", s[i..].chars().next().unwrap()),
                })
            }
        };
        out.push((t, i));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a RingRef,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.len)
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let at = self.here();
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| ParseError::Syntax {
                        pos: at,
                        msg: "exponent too large".into(),
                    })?;
                    if let Some(Tok::Caret) = self.peek() {
                        return Err(ParseError::Syntax {
                            pos: self.here(),
                            msg: "chained exponent".into(),
                        });
                    }
                    Ok(base.pow(e))
                }
                _ => Err(ParseError::Syntax { pos: at, msg: "expected a nonnegative integer exponent".into() }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let at = self.here();
        let f = self.ring.field();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(self.ring.constant(f.from_bigint(&n)))
            }
            Some(Tok::Rat(n, d)) => {
                self.pos += 1;
                let c = f.from_fraction(&n, &d).ok_or(ParseError::ZeroDenominator { pos: at })?;
                Ok(self.ring.constant(c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.ring.var_index(&name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(ParseError::UnknownVariable { name, pos: at }),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(ParseError::Syntax { pos: self.here(), msg: "expected ')'".into() }),
                }
            }
            Some(t) => Err(ParseError::Syntax { pos: at, msg: format!("unexpected token {:?}", t) }),
            None => Err(ParseError::Syntax { pos: at, msg: "unexpected end of input".into() }),
        }
    }
}

/// Parse a polynomial over `ring`.
pub fn parse_polynomial(ring: &RingRef, s: &str) -> Result<Polynomial, ParseError> {
    let toks = lex(s)?;
    let mut p = Parser { toks, pos: 0, ring, len: s.len() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::Syntax { pos: p.here(), msg: "trailing input".into() });
    }
    Ok(e)
}

/// Split on top-level commas (outside parentheses), with byte offsets.
pub fn split_top_level(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

/// Parse a comma separated list of polynomials.
pub fn parse_list(ring: &RingRef, s: &str) -> Result<Vec<Polynomial>, ParseError> {
    let mut out = Vec::new();
    for (off, piece) in split_top_level(s) {
        if piece.trim().is_empty() {
            continue;
        }
        out.push(parse_polynomial(ring, piece).map_err(|e| shift(e, off))?);
    }
    Ok(out)
}

fn shift(e: ParseError, off: usize) -> ParseError {
    match e {
        ParseError::Syntax { pos, msg } => ParseError::Syntax { pos: pos + off, msg },
        ParseError::UnknownVariable { name, pos } => ParseError::UnknownVariable { name, pos: pos + off },
        ParseError::Division { pos } => ParseError::Division { pos: pos + off },
        ParseError::ZeroDenominator { pos } => ParseError::ZeroDenominator { pos: pos + off },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use crate::scalar::Field;

    #[test]
    fn precedence() {
        let r = Ring::standard(&["a0", "a1", "a2"], Field::Rational);
        let p = parse_polynomial(&r, "a0*a2*(a0 - a2) + 2*a1^2").unwrap();
        assert_eq!(p.to_string(), "a0^2*a2 - a0*a2^2 + 2*a1^2");
        let q = parse_polynomial(&r, "-a0^2").unwrap();
        assert_eq!(q.to_string(), "-a0^2");
        let s = parse_polynomial(&r, "3/4*a0 - 1/2").unwrap();
        assert_eq!(s.to_string(), "3/4*a0 - 1/2");
    }

    #[test]
    fn errors() {
        let r = Ring::standard(&["x", "y"], Field::Rational);
        assert!(matches!(parse_polynomial(&r, "x/y"), Err(ParseError::Division { pos: 1 })));
        assert!(matches!(parse_polynomial(&r, "x + z"), Err(ParseError::UnknownVariable { pos: 4, .. })));
        assert!(matches!(parse_polynomial(&r, "x + "), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_polynomial(&r, "x^y"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn list_offsets() {
        let r = Ring::standard(&["x", "y"], Field::Rational);
        let e = parse_list(&r, "x, y, w").unwrap_err();
        assert_eq!(e, ParseError::UnknownVariable { name: "w".into(), pos: 6 });
    }
}
