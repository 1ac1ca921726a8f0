//! The ring-element expression grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term { ('+'|'-') term }
//! term   := factor { ['*'] factor }          (juxtaposition multiplies)
//! factor := atom [ '^' integer ]
//! atom   := integer | name | '(' expr ')'
//! name   := letter { digit }                 (x, g, u6, x1, ...)
//! ```
//!
//! Names are resolved by the caller, so the same parser serves integer
//! polynomials, power series and monoid-ring elements.

use num_bigint::BigInt;

use crate::algebra::{Integers, Ring, TruncSeries, UPoly, UPolyRing};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Name(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => {
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Tok::Int(text.parse().expect("digits")));
            }
            c if c.is_alphabetic() => {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Name(chars[start..i].iter().collect()));
            }
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' | '\u{2212}' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' | '\u{b7}' => {
                out.push(Tok::Star);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            other => return Err(Error::Parse(format!("unexpected character '{other}' at {i}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Expr::Neg(Box::new(self.term()?))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Tok::Int(_)) | Some(Tok::Name(_)) | Some(Tok::LParen) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Int(k)) => {
                    let k: u64 = k
                        .try_into()
                        .map_err(|_| Error::Parse("exponent out of range".into()))?;
                    return Ok(Expr::Pow(Box::new(base), k));
                }
                _ => return Err(Error::Parse("expected a non-negative integer exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Expr::Int(n)),
            Some(Tok::Name(s)) => Ok(Expr::Name(s)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("expected ')'".into())),
                }
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Parse an expression without resolving names.
pub fn parse_expr(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

impl Expr {
    /// Evaluate in `ring`, resolving names through `resolve`.
    pub fn eval<R: Ring>(
        &self,
        ring: &R,
        resolve: &dyn Fn(&str) -> Result<R::Elem>,
    ) -> Result<R::Elem> {
        Ok(match self {
            Expr::Int(n) => ring.from_int(n),
            Expr::Name(s) => resolve(s)?,
            Expr::Add(a, b) => ring.add(&a.eval(ring, resolve)?, &b.eval(ring, resolve)?),
            Expr::Sub(a, b) => ring.sub(&a.eval(ring, resolve)?, &b.eval(ring, resolve)?),
            Expr::Mul(a, b) => ring.mul(&a.eval(ring, resolve)?, &b.eval(ring, resolve)?),
            Expr::Neg(a) => ring.neg(&a.eval(ring, resolve)?),
            Expr::Pow(a, k) => ring.pow(&a.eval(ring, resolve)?, *k),
        })
    }
}

/// Parse an element of `ring` with the given name resolver.
pub fn parse_in<R: Ring>(
    s: &str,
    ring: &R,
    resolve: &dyn Fn(&str) -> Result<R::Elem>,
) -> Result<R::Elem> {
    parse_expr(s)?.eval(ring, resolve)
}

fn univariate(s: &str, var: &str) -> Result<UPoly> {
    parse_in(s, &UPolyRing, &|name| {
        if name == var {
            Ok(UPoly::x())
        } else {
            Err(Error::Parse(format!("unknown name '{name}', expected '{var}'")))
        }
    })
}

/// An integer polynomial in `x`, e.g. `x^5-1` or `3x^2 - (x+1)^2`.
pub fn parse_upoly(s: &str) -> Result<UPoly> {
    univariate(s, "x")
}

/// An integer power series in `t` truncated at `order`, e.g. `1+2t+3t^2`.
pub fn parse_series(s: &str, order: usize) -> Result<TruncSeries<BigInt>> {
    let p = univariate(s, "t")?;
    Ok(TruncSeries::new(&Integers, p.coeffs().to_vec(), order))
}

/// Comma-separated integers, e.g. `3,5,-7`.
pub fn parse_int_list(s: &str) -> Result<Vec<BigInt>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(format!("'{p}': {e}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials() {
        assert_eq!(parse_upoly("x^5-1").unwrap(), UPoly::x_pow_minus_one(5));
        assert_eq!(parse_upoly("x^2 - 2").unwrap(), UPoly::from_i64s(&[-2, 0, 1]));
        assert_eq!(parse_upoly("3x^2").unwrap(), UPoly::from_i64s(&[0, 0, 3]));
        assert_eq!(parse_upoly("(x+1)(x-1)").unwrap(), UPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(parse_upoly("-x").unwrap(), UPoly::from_i64s(&[0, -1]));
        assert_eq!(parse_upoly("x\u{2212}2").unwrap(), UPoly::from_i64s(&[-2, 1]));
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_upoly("2*x^2+1").unwrap(), UPoly::from_i64s(&[1, 0, 2]));
        assert_eq!(parse_upoly("-x^2").unwrap(), UPoly::from_i64s(&[0, 0, -1]));
        assert_eq!(parse_upoly("1-x-x").unwrap(), UPoly::from_i64s(&[1, -2]));
    }

    #[test]
    fn errors() {
        assert!(parse_upoly("x^").is_err());
        assert!(parse_upoly("y+1").is_err());
        assert!(parse_upoly("(x+1").is_err());
        assert!(parse_upoly("").is_err());
        assert!(parse_upoly("x ? 1").is_err());
    }

    #[test]
    fn series_and_lists() {
        let s = parse_series("1+2t+3t^2", 4).unwrap();
        let want: Vec<BigInt> = [1, 2, 3, 0, 0].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(s.coeffs(), &want[..]);
        assert_eq!(parse_int_list("3, 5,-7").unwrap(), vec![3.into(), 5.into(), BigInt::from(-7)]);
        assert!(parse_int_list("").unwrap().is_empty());
    }

    #[test]
    fn indexed_names() {
        let e = parse_expr("u6^2 + x1").unwrap();
        let Expr::Add(a, b) = e else { panic!() };
        assert_eq!(*a, Expr::Pow(Box::new(Expr::Name("u6".into())), 2));
        assert_eq!(*b, Expr::Name("x1".into()));
    }
}
