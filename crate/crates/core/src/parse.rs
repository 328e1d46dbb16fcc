//! Polynomial expressions: `w1..wl`, `t1..tn`, `t` (F4), rationals,
//! `+ - * / ^` and parentheses. `/` divides by a constant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rootdata::RootDatum;

pub fn parse_polynomial(datum: &RootDatum, text: &str) -> Result<Polynomial> {
    let mut p = Parser {
        datum,
        src: text.as_bytes(),
        pos: 0,
    };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(Error::parse(p.pos, format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(f)
}

struct Parser<'a> {
    datum: &'a RootDatum,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn nvars(&self) -> usize {
        self.datum.rank()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let d = self.unary()?;
                    let c = d
                        .as_constant()
                        .ok_or_else(|| Error::parse(at, "division is only by a constant"))?;
                    if c.is_zero() {
                        return Err(Error::parse(at, "division by zero"));
                    }
                    acc = acc.scale(&(BigRational::from_integer(1.into()) / c));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(Error::parse(at, "expected a nonnegative integer exponent"));
            }
            let e: u32 = digits
                .parse()
                .map_err(|_| Error::parse(at, "exponent too large"))?;
            if e > 255 {
                return Err(Error::parse(at, "exponent too large"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = match self.peek() {
            None => return Err(Error::parse(self.pos, "unexpected end of input")),
            Some(_) => self.pos,
        };
        let c = self.src[at];
        if c == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            if self.peek() != Some(b')') {
                return Err(Error::parse(self.pos, "expected `)`"));
            }
            self.pos += 1;
            return Ok(inner);
        }
        if c.is_ascii_digit() {
            let n: BigInt = self.digits().parse().expect("digit string");
            return Ok(Polynomial::constant(self.nvars(), BigRational::from_integer(n)));
        }
        if c.is_ascii_alphabetic() {
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            return self.variable(name, start);
        }
        Err(Error::parse(at, format!("unexpected `{}`", c as char)))
    }

    fn variable(&self, name: &str, at: usize) -> Result<Polynomial> {
        let l = self.nvars();
        if let Some(idx) = name.strip_prefix('w') {
            if let Ok(i) = idx.parse::<usize>() {
                if (1..=l).contains(&i) {
                    return Ok(Polynomial::var(l, i - 1));
                }
                return Err(Error::parse(at, format!("`{name}`: fundamental weights are w1..w{l}")));
            }
        }
        if let Some(tc) = self.datum.t_class(name) {
            return Ok(tc.weight.to_polynomial());
        }
        Err(Error::parse(at, format!("unknown variable `{name}` for type {}", self.datum.cartan_type())))
    }
}
