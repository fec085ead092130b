//! Parser for polynomial expressions such as `"(x - y)*(x^2 + 3/2*y*z)"`.
//!
//! Grammar: sums and differences of products, integer powers, parentheses,
//! integer literals, division by constants and the variables x, y, z.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::polynomial::HomogeneousPolynomial;
use crate::error::{Error, Result};
use crate::linalg::rational::Rational;

type Poly = BTreeMap<[u32; 3], Rational>;

fn constant(c: Rational) -> Poly {
    let mut p = Poly::new();
    if !c.is_zero() {
        p.insert([0, 0, 0], c);
    }
    p
}

fn add(a: &Poly, b: &Poly, sign: i32) -> Poly {
    let mut out = a.clone();
    for (m, c) in b {
        let e = out.entry(*m).or_insert_with(Rational::zero);
        if sign < 0 {
            *e -= c;
        } else {
            *e += c;
        }
        if e.is_zero() {
            out.remove(m);
        }
    }
    out
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m = [ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]];
            let e = out.entry(m).or_insert_with(Rational::zero);
            *e += ca * cb;
            if e.is_zero() {
                out.remove(&m);
            }
        }
    }
    out
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                add(&Poly::new(), &self.term()?, -1)
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = add(&acc, &t, if c == b'-' { -1 } else { 1 });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = mul(&acc, &self.power()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    let c = match d.get(&[0, 0, 0]) {
                        Some(c) if d.len() == 1 => c.clone(),
                        _ => return Err(self.err("division by a non-constant")),
                    };
                    acc = mul(&acc, &constant(Rational::one() / c));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent out of range"))?;
            let mut out = constant(Rational::one());
            for _ in 0..e {
                out = mul(&out, &base);
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(add(&Poly::new(), &self.power()?, -1))
            }
            Some(c @ (b'x' | b'y' | b'z')) => {
                self.pos += 1;
                let mut e = [0; 3];
                e[(c - b'x') as usize] = 1;
                let mut p = Poly::new();
                p.insert(e, Rational::one());
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => Ok(constant(Rational::from_integer(self.integer()?))),
            _ => Err(self.err("unexpected input")),
        }
    }
}

/// Parses a homogeneous polynomial; errors on non-homogeneous input.
pub fn parse_polynomial(text: &str) -> Result<HomogeneousPolynomial> {
    let mut parser = Parser {
        s: text.as_bytes(),
        pos: 0,
    };
    let p = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.err("trailing input"));
    }
    let degree = p.keys().next().map_or(0, |m| m.iter().sum());
    if p.keys().any(|m| m.iter().sum::<u32>() != degree) {
        return Err(Error::Parse("expression is not homogeneous".into()));
    }
    HomogeneousPolynomial::from_terms(degree, p.into_iter().map(|(m, c)| (Monomial(m), c)))
}
