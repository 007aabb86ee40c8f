//! A small infix parser: `"3/2*x^2*y - (y + 1)^2"`.
//!
//! Identifiers must be ring variables, except `I`, which denotes the imaginary
//! unit when the field has one.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{parse_rational, Field};

use super::{Polynomial, Ring};

impl<F: Field> Polynomial<F> {
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<Self> {
        let mut p = Parser {
            ring,
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let out = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::parse(format!("`{text}`@{}", self.pos), msg)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -&self.term::<F>()?
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let e: u32 = digits.parse().map_err(|_| self.error("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base<F: Field>(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '/') {
                    self.pos += 1;
                }
                let text: String = self.chars[start..self.pos].iter().collect();
                let q = parse_rational(&text).ok_or_else(|| self.error("bad number"))?;
                Ok(Polynomial::constant(self.ring, F::from_rational(&q)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                if let Some(idx) = self.ring.var_index(&name) {
                    return Ok(Polynomial::var(self.ring, idx));
                }
                if name == "I" {
                    if let Some(i) = F::imaginary_unit() {
                        return Ok(Polynomial::constant(self.ring, i));
                    }
                }
                Err(self.error(&format!("unknown variable `{name}`")))
            }
            _ => Err(self.error("expected a number, variable or `(`")),
        }
    }
}
