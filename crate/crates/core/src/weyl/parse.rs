//! Parser for operator expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | IDENT | '(' expr ')' | 't' '[' INT ',' INT ';' expr ']'
//! ```
//!
//! Identifiers: `q`, `p`, `I` (identity), `x` (`(qp+pq)/2`), `i`, `c` (`i*hbar/2`)
//! and the scalar symbols `hbar`, `s`, `sp`, `u`, `y`, `v`, `gamma`, `mu`.
//! Division is only by nonzero numeric constants.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Var};
use crate::scalar::ExactScalar;

use super::ordered::{ordered_product, x_hat, Form, OrderedProductSpec};
use super::OpPoly;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|c| c.1).collect();
            out.push((pos, Tok::Int(text.parse().expect("digits"))));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|c| c.1).collect())));
        } else if "+-*/^()[],;".contains(ch) {
            out.push((pos, Tok::Sym(ch)));
            i += 1;
        } else {
            return Err(Error::Parse { pos, msg: format!("unexpected character `{ch}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(&Tok::Sym(ch)) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, ch: char) -> Result<()> {
        if self.eat(ch) {
            Ok(())
        } else {
            self.err(format!("expected `{ch}`"))
        }
    }

    fn int(&mut self) -> Result<u32> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.idx += 1;
                u32::try_from(n).or_else(|_| self.err("integer too large"))
            }
            _ => self.err("expected integer"),
        }
    }

    fn expr(&mut self) -> Result<OpPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<OpPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let pos = self.pos();
                let d = self.unary()?;
                let c = d
                    .as_scalar()
                    .and_then(|c| c.as_constant())
                    .filter(|c| !c.is_zero())
                    .ok_or(Error::Parse { pos, msg: "division only by a nonzero number".into() })?;
                acc = acc.scale(&MultiPoly::constant(ExactScalar::one() / c));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<OpPoly> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        let base = self.atom()?;
        if self.eat('^') {
            let k = self.int()?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<OpPoly> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.idx += 1;
                Ok(OpPoly::scalar(MultiPoly::constant(ExactScalar::from(n))))
            }
            Some(Tok::Sym('(')) => {
                self.idx += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.idx += 1;
                self.ident(&name)
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }

    fn ident(&mut self, name: &str) -> Result<OpPoly> {
        Ok(match name {
            "q" => OpPoly::q(),
            "p" => OpPoly::p(),
            "I" => OpPoly::identity(),
            "x" => x_hat(),
            "i" => OpPoly::scalar(MultiPoly::i()),
            "c" => OpPoly::scalar(MultiPoly::c()),
            "t" if self.peek() == Some(&Tok::Sym('[')) => {
                self.idx += 1;
                let n = self.int()?;
                self.expect(',')?;
                let m = self.int()?;
                self.expect(';')?;
                let pos = self.pos();
                let s = self.expr()?;
                self.expect(']')?;
                let s = s.as_scalar().ok_or(Error::Parse { pos, msg: "ordering parameter must be a scalar".into() })?;
                ordered_product(&OrderedProductSpec::new(n, m, s), Form::QOuter)
            }
            other => match Var::from_name(other) {
                Some(v) if v != Var::X => OpPoly::scalar(MultiPoly::var(v)),
                _ => return self.err(format!("unknown identifier `{other}`")),
            },
        })
    }
}

/// Parses and normal-orders an operator expression.
pub fn parse_operator(src: &str) -> Result<OpPoly> {
    let mut p = Parser { toks: lex(src)?, idx: 0, end: src.len() };
    let e = p.expr()?;
    if p.idx != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_examples() {
        assert_eq!(parse_operator("p*q").unwrap().to_string(), "q*p - i*hbar");
        assert_eq!(parse_operator("t[1,1;0]").unwrap().to_string(), "q*p - (1/2)*i*hbar");
        let nested = parse_operator("q*(p*q)*p").unwrap();
        let flat = &(&(&OpPoly::q() * &OpPoly::p()) * &OpPoly::q()) * &OpPoly::p();
        assert_eq!(nested, flat);
    }

    #[test]
    fn rendering_reparses() {
        for src in ["t[2,1;s]", "x^3", "t[2,2;1/2] - t[2,2;i*s]", "(1+2*i)*q^2 - c*p"] {
            let a = parse_operator(src).unwrap();
            let b = parse_operator(&a.to_string()).unwrap();
            assert_eq!(a, b, "{src} -> {a}");
        }
    }

    #[test]
    fn errors_carry_position() {
        match parse_operator("q * $") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        match parse_operator("q / p") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_operator("t[1,1;q]").is_err());
        assert!(parse_operator("(q").is_err());
    }
}
