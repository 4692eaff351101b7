//! Expressions such as `g1 X1 - (q - q^-1) e1 X2` or `2 t1^2 (Xi2 + 1)`.
//!
//! Atoms: integers, `q`, `q^k`, `t<j>`, `X<j>`, `Xi<j>` (= `X_j^{-1}`), `g<i>`,
//! `gi<i>` (= `g_i^{-1}`), `e<i>`, `Th<i>`. Juxtaposition multiplies, `^k`
//! raises an atom or parenthesised group to an integer power (negative powers
//! only where an inverse is known).

use thiserror::Error;

use crate::ayh::{gen, try_mult, AyhError, Gen, Guard, PbwElement};
use crate::scalars::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("{0}")]
    Syntax(String),
    #[error(transparent)]
    Algebra(#[from] AyhError),
}

impl From<String> for ExprError {
    fn from(s: String) -> Self {
        ExprError::Syntax(s)
    }
}

impl From<&str> for ExprError {
    fn from(s: &str) -> Self {
        ExprError::Syntax(s.to_string())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Plus,
    Minus,
    Caret,
    Open,
    Close,
}

fn lex(s: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '*' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::Open);
                i += 1;
            }
            ')' => {
                out.push(Tok::Close);
                i += 1;
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Tok::Num(text.parse().map_err(|_| format!("number too large: {text}"))?));
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(format!("unexpected character '{other}'")),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    r: usize,
    n: usize,
    guard: &'a Guard,
}

type Parsed = Result<PbwElement, ExprError>;

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn mul(&self, a: &PbwElement, b: &PbwElement) -> Parsed {
        Ok(try_mult(a, b, self.guard)?)
    }

    fn expr(&mut self) -> Parsed {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Parsed {
        let mut sign = false;
        while self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            sign = !sign;
        }
        let mut acc = self.power()?;
        while matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Open)) {
            let f = self.power()?;
            acc = self.mul(&acc, &f)?;
        }
        Ok(if sign { acc.neg() } else { acc })
    }

    fn exponent(&mut self) -> Result<Option<i64>, ExprError> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(None);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.next() {
            Some(Tok::Num(k)) => Ok(Some(if neg { -k } else { k })),
            _ => Err("expected an integer exponent after '^'".into()),
        }
    }

    fn power(&mut self) -> Parsed {
        let (base, inverse) = self.atom()?;
        let Some(k) = self.exponent()? else { return Ok(base) };
        let base = if k < 0 { inverse.ok_or("negative power of an element with no known inverse")? } else { base };
        let mut acc = PbwElement::one(self.r, self.n);
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(&acc, &base)?;
        }
        Ok(acc)
    }

    /// An atom together with its inverse when that is a single atom.
    fn atom(&mut self) -> Result<(PbwElement, Option<PbwElement>), ExprError> {
        let (r, n) = (self.r, self.n);
        match self.next() {
            Some(Tok::Num(k)) => {
                let c = Scalar::from_int(k);
                let inv = c.inv().ok().map(|i| PbwElement::scalar(r, n, i));
                Ok((PbwElement::scalar(r, n, c), inv))
            }
            Some(Tok::Open) => {
                let e = self.expr()?;
                if self.next() != Some(Tok::Close) {
                    return Err("missing ')'".into());
                }
                Ok((e, None))
            }
            Some(Tok::Ident(id)) => self.generator(&id),
            Some(t) => Err(format!("unexpected token {t:?}").into()),
            None => Err("unexpected end of expression".into()),
        }
    }

    fn generator(&self, id: &str) -> Result<(PbwElement, Option<PbwElement>), ExprError> {
        let (r, n) = (self.r, self.n);
        if id == "q" {
            return Ok((PbwElement::scalar(r, n, Scalar::q()), Some(PbwElement::scalar(r, n, Scalar::q_pow(-1)))));
        }
        let split = id.find(|c: char| c.is_ascii_digit()).ok_or_else(|| format!("unknown symbol '{id}'"))?;
        let (name, digits) = id.split_at(split);
        let index: usize = digits.parse().map_err(|_| format!("bad index in '{id}'"))?;
        let kinds = match name {
            "t" => (Gen::T, None),
            "X" => (Gen::X, Some(Gen::XInv)),
            "Xi" => (Gen::XInv, Some(Gen::X)),
            "g" => (Gen::G, Some(Gen::GInv)),
            "gi" => (Gen::GInv, Some(Gen::G)),
            "e" => (Gen::E, None),
            "Th" => (Gen::Theta, None),
            _ => return Err(format!("unknown generator '{name}'").into()),
        };
        let make = |k: Gen| gen(r, n, k, index);
        let base = make(kinds.0)?;
        let inverse = match kinds {
            (Gen::T, _) => Some(self.pow_plain(&base, r.saturating_sub(1))?),
            (_, Some(k)) => Some(make(k)?),
            _ => None,
        };
        Ok((base, inverse))
    }

    fn pow_plain(&self, a: &PbwElement, k: usize) -> Parsed {
        let mut acc = PbwElement::one(self.r, self.n);
        for _ in 0..k {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }
}

/// Parses and evaluates an expression in the algebra of rank `(r, n)`.
pub fn evaluate(src: &str, r: usize, n: usize, guard: &Guard) -> Result<PbwElement, ExprError> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err("empty expression".into());
    }
    let mut p = Parser { toks, pos: 0, r, n, guard };
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(format!("unexpected trailing input at token {}", p.pos + 1).into());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ayh::mult;

    fn ev(s: &str, r: usize, n: usize) -> PbwElement {
        evaluate(s, r, n, &Guard::default()).unwrap()
    }

    #[test]
    fn gxxg() {
        let lhs = ev("g1 X1", 2, 2);
        let rhs = ev("X2 g1 - (q - q^-1) e1 X2", 2, 2);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, mult(&PbwElement::g(2, 2, 1), &PbwElement::x_pow(2, 2, 1, 1)));
    }

    #[test]
    fn powers_and_inverses() {
        assert_eq!(ev("X1^-2", 2, 2), PbwElement::x_pow(2, 2, 1, -2));
        assert_eq!(ev("Xi1 X1", 2, 2), PbwElement::one(2, 2));
        assert_eq!(ev("g1^-1 g1", 3, 2), PbwElement::one(3, 2));
        assert_eq!(ev("t1^-1 t1", 3, 2), PbwElement::one(3, 2));
        assert_eq!(ev("t1^3", 3, 2), PbwElement::one(3, 2));
        assert_eq!(ev("2 q^2 - 2 q^2", 1, 1), PbwElement::zero(1, 1));
        assert_eq!(ev("-(-1)", 1, 1), PbwElement::one(1, 1));
    }

    #[test]
    fn errors() {
        let g = Guard::default();
        assert!(evaluate("g3", 2, 2, &g).is_err());
        assert!(evaluate("(g1 + 1)^-1", 2, 2, &g).is_err());
        assert!(evaluate("g1 )", 2, 2, &g).is_err());
        assert!(evaluate("", 2, 2, &g).is_err());
        assert!(evaluate("y1", 2, 2, &g).is_err());
    }
}
