//! Text form of polynomials: `+ - * / ^`, parentheses, integer literals,
//! named variables, and `z` for the primitive root of unity ζ_N of the
//! declared conductor. Division is only allowed by nonzero constants.

use num_bigint::BigInt;

use super::monomial::{Monomial, MonomialOrder};
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::exactnum::{CycNum, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = chars[start..i].iter().collect();
            out.push(Tok::Num(txt.parse().unwrap()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a [String],
    conductor: u32,
    order: MonomialOrder,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn constant(&self, c: CycNum) -> Poly {
        Poly::constant(c, self.nvars(), self.order)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                if !(d.is_constant()) {
                    return Err(Error::Parse(
                        "division is only supported by nonzero constants".into(),
                    ));
                }
                let inv = d.leading_coeff().unwrap().inv()?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Parse("expected a non-negative integer exponent".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(self.constant(CycNum::from_rational(
                    &Rational::from_integer(n),
                    self.conductor,
                )))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.names.iter().position(|v| *v == name) {
                    let m = Monomial::var(self.nvars(), i);
                    Ok(Poly::monomial(m, CycNum::one(self.conductor), self.order))
                } else if name == "z" {
                    Ok(self.constant(CycNum::zeta(self.conductor)))
                } else {
                    Err(Error::Parse(format!("unknown variable {name:?}")))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(inner)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses a polynomial in the variables `names` with coefficients in Q(ζ_N).
pub fn parse_poly(
    s: &str,
    names: &[String],
    conductor: u32,
    order: MonomialOrder,
) -> Result<Poly> {
    if conductor == 0 {
        return Err(Error::ZeroConductor);
    }
    if names.iter().any(|n| n == "z") {
        return Err(Error::Parse("`z` is reserved for the root of unity".into()));
    }
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
        names,
        conductor,
        order,
    };
    if p.toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input after position {} in {s:?}",
            p.pos
        )));
    }
    Ok(out)
}
