use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Monomial, Polynomial, Ring};
use crate::{Error, Result};

/// Parses `c*x1^2*x3 - 4/1*x2^2 + …`. Factors are numbers (integers or
/// `a/b`) and variables with optional `^exponent`; whitespace is ignored.
/// Error columns are 1-based character positions in `text`.
pub fn parse_polynomial(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        ring,
    };
    p.polynomial()
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn err<T>(&self, at: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            col: at + 1,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let field = self.ring.field();
        let mut out = Polynomial::zero(self.ring);
        if self.peek().is_none() {
            return self.err(self.pos, "empty polynomial");
        }
        let mut first = true;
        loop {
            let mut negative = false;
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                }
                Some('-') => {
                    negative = true;
                    self.pos += 1;
                }
                Some(c) if !first => {
                    return self.err(self.pos, format!("expected `+` or `-`, found `{c}`"));
                }
                _ => {}
            }
            let (coeff, mono) = self.term()?;
            let coeff = if negative { -coeff } else { coeff };
            out.add_term(mono, &field.from_rational(&coeff).map_err(|_| Error::Parse {
                col: self.pos + 1,
                msg: format!("coefficient {coeff} is not defined in {field}"),
            })?);
            first = false;
            if self.peek().is_none() {
                return Ok(out);
            }
        }
    }

    fn term(&mut self) -> Result<(BigRational, Monomial)> {
        let mut coeff = BigRational::from_integer(1.into());
        let mut exps = vec![0u16; self.ring.n()];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff *= self.number()?;
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let (var, e) = self.power()?;
                    exps[var] = exps[var]
                        .checked_add(e)
                        .ok_or_else(|| Error::Parse {
                            col: self.pos,
                            msg: "exponent overflow".into(),
                        })?;
                }
                Some(c) => return self.err(self.pos, format!("unexpected `{c}`")),
                None => return self.err(self.pos, "expected a term"),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
                continue;
            }
            return Ok((coeff, Monomial::from_exps(exps)));
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn number(&mut self) -> Result<BigRational> {
        let num = self.digits()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return self.err(at, "zero denominator");
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn power(&mut self) -> Result<(usize, u16)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let Some(var) = self.ring.var_index(&name) else {
            return self.err(start, format!("unknown variable `{name}`"));
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let at = self.pos;
            let e = self.digits()?;
            let e: u16 = e.try_into().or_else(|_| self.err(at, "exponent too large"))?;
            return Ok((var, e));
        }
        Ok((var, 1))
    }
}
