use num_bigint::BigUint;

use super::Cnf;
use crate::error::{parse_err, Result};

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, msg: &str) -> Result<T> {
        Err(parse_err(1, format!("{msg} at column {} in `{}`", self.pos + 1, self.src)))
    }

    fn nat(&mut self) -> Result<BigUint> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected a number");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn is_omega(c: Option<char>) -> bool {
        matches!(c, Some('w') | Some('ω'))
    }

    fn sum(&mut self) -> Result<Cnf> {
        let mut acc = self.term()?;
        while self.eat('+') {
            acc = acc.add(&self.term()?);
        }
        Ok(acc)
    }

    fn coefficient(&mut self) -> Result<BigUint> {
        if self.eat('*') || self.eat('·') {
            self.nat()
        } else {
            Ok(BigUint::from(1u32))
        }
    }

    fn term(&mut self) -> Result<Cnf> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Cnf::nat(self.nat()?)),
            c if Self::is_omega(c) => {
                self.pos += 1;
                let e = if self.eat('^') { self.exponent()? } else { Cnf::one() };
                let m = self.coefficient()?;
                Ok(Cnf::term(e, m))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return self.fail("expected `)`");
                }
                let m = self.coefficient()?;
                Ok(inner.mul(&Cnf::nat(m)))
            }
            _ => self.fail("expected a term"),
        }
    }

    fn exponent(&mut self) -> Result<Cnf> {
        match self.peek() {
            Some('{') => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat('}') {
                    return self.fail("expected `}`");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Cnf::nat(self.nat()?)),
            c if Self::is_omega(c) => {
                self.pos += 1;
                let e = if self.eat('^') { self.exponent()? } else { Cnf::one() };
                Ok(Cnf::omega_power(e))
            }
            _ => self.fail("expected an exponent"),
        }
    }
}

/// Parses the text form described in the module docs.
pub fn parse_cnf(text: &str) -> Result<Cnf> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        src: text,
    };
    let v = p.sum()?;
    if p.peek().is_some() {
        return p.fail("trailing input");
    }
    Ok(v)
}
