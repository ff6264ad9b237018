//! Text grammar shared by polynomials, elements, and CLI expressions.
//!
//! Rational literals (`3/2`), identifiers, `+ - * ^`, parentheses, and
//! function calls `f(a, b)`. Juxtaposition multiplies (`2x`, `(D+1)(D-1)`).

use num_bigint::BigInt;

use super::{MultiPoly, Rational, Var};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Rational),
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(String, Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let num: String = chars[start..i].iter().map(|(_, c)| *c).collect();
            let mut value = Rational::from_integer(num.parse::<BigInt>().unwrap());
            // `3/2` is a single literal; `/` is not an operator otherwise.
            if i < chars.len() && chars[i].1 == '/' {
                let dstart = i + 1;
                let mut j = dstart;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                if j == dstart {
                    return Err(Error::Format(format!(
                        "expected denominator after `/` at offset {}",
                        chars[i].0
                    )));
                }
                let den: String = chars[dstart..j].iter().map(|(_, c)| *c).collect();
                let den = den.parse::<BigInt>().unwrap();
                if den == BigInt::from(0) {
                    return Err(Error::Format(format!("zero denominator at offset {pos}")));
                }
                value /= Rational::from_integer(den);
                i = j;
            }
            out.push((pos, Tok::Num(value)));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let id: String = chars[start..i].iter().map(|(_, c)| *c).collect();
            out.push((pos, Tok::Ident(id)));
        } else if "+-*^(),".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Format(format!(
                "unexpected character `{c}` at offset {pos}"
            )));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.len)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Format(format!(
                "expected `{c}` at offset {}",
                self.offset()
            )))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('('))
        )
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.starts_atom() {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some((_, Tok::Num(n))) if n.is_integer() => {
                    self.pos += 1;
                    let e: u32 = n
                        .to_integer()
                        .try_into()
                        .map_err(|_| Error::Format("exponent out of range".to_string()))?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => Err(Error::Format(format!(
                    "expected non-negative integer exponent at offset {}",
                    self.offset()
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let off = self.offset();
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Num(n))) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some((_, Tok::Ident(id))) => {
                self.pos += 1;
                // A variable followed by `(` is a product, not a call.
                if Var::from_name(&id).is_err() && self.eat('(') {
                    let mut args = Vec::new();
                    if !self.eat(')') {
                        loop {
                            args.push(self.expr()?);
                            if self.eat(')') {
                                break;
                            }
                            self.expect(',')?;
                        }
                    }
                    Ok(Expr::Call(id, args))
                } else {
                    Ok(Expr::Ident(id))
                }
            }
            Some((_, Tok::Op('('))) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some((_, t)) => Err(Error::Format(format!(
                "unexpected token {t:?} at offset {off}"
            ))),
            None => Err(Error::Format("unexpected end of input".to_string())),
        }
    }
}

/// Parses an expression into an AST.
pub fn parse_expr(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    let mut p = Parser {
        toks,
        pos: 0,
        len: s.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Format(format!(
            "trailing input at offset {}",
            p.offset()
        )));
    }
    Ok(e)
}

impl Expr {
    /// Evaluates as a polynomial over the variable alphabet.
    pub fn to_poly(&self) -> Result<MultiPoly> {
        Ok(match self {
            Expr::Num(n) => MultiPoly::constant(n.clone()),
            Expr::Ident(id) => MultiPoly::var(Var::from_name(id)?),
            Expr::Neg(a) => -a.to_poly()?,
            Expr::Add(a, b) => a.to_poly()? + b.to_poly()?,
            Expr::Sub(a, b) => a.to_poly()? - b.to_poly()?,
            Expr::Mul(a, b) => a.to_poly()? * b.to_poly()?,
            Expr::Pow(a, e) => a.to_poly()?.pow(*e),
            Expr::Call(f, _) => {
                return Err(Error::Format(format!(
                    "function `{f}` not allowed in a polynomial"
                )))
            }
        })
    }
}

/// Parses a polynomial in `D x l m t`.
pub fn parse_poly(s: &str) -> Result<MultiPoly> {
    parse_expr(s)?.to_poly()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_and_precedence() {
        let p = parse_poly("3/2*x^2 - (D + l)*2").unwrap();
        assert_eq!(p.to_string(), "-2*D - 2*l + 3/2*x^2");
        assert_eq!(parse_poly("-x^2").unwrap().to_string(), "-x^2");
        assert_eq!(
            parse_poly("2x(D+1)").unwrap(),
            parse_poly("2*x*D + 2*x").unwrap()
        );
        assert_eq!(parse_poly("λ + μ").unwrap(), parse_poly("l + m").unwrap());
    }

    #[test]
    fn errors() {
        assert!(parse_poly("y").is_err());
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("1/0").is_err());
        assert!(parse_poly("x^-1").is_err());
        assert!(parse_poly("(x").is_err());
        assert!(parse_poly("f(x)").is_err());
    }

    #[test]
    fn calls() {
        let e = parse_expr("lprod(x, D*x)").unwrap();
        match e {
            Expr::Call(f, args) => {
                assert_eq!(f, "lprod");
                assert_eq!(args.len(), 2);
            }
            _ => panic!(),
        }
    }
}
