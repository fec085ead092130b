use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::dense::DenseForm;
use super::monomial::{monomial_count, monomials, Monomial};
use crate::error::{Error, Result};
use crate::linalg::rational::{primitive_integer_vector, Rational};

/// Homogeneous polynomial in x, y, z with rational coefficients.
///
/// Only nonzero coefficients are stored; the zero polynomial keeps its
/// degree tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousPolynomial {
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl HomogeneousPolynomial {
    pub fn zero(degree: u32) -> Self {
        HomogeneousPolynomial {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::new(0, 0, 0), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.degree());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The coordinate function with index `v` (0 = x, 1 = y, 2 = z).
    pub fn var(v: usize) -> Self {
        let mut e = [0; 3];
        e[v] = 1;
        Self::monomial(Monomial(e), Rational::one())
    }

    pub fn x() -> Self {
        Self::var(0)
    }

    pub fn y() -> Self {
        Self::var(1)
    }

    pub fn z() -> Self {
        Self::var(2)
    }

    /// The linear form a·x + b·y + c·z.
    pub fn linear(a: Rational, b: Rational, c: Rational) -> Self {
        Self::from_terms(
            1,
            [
                (Monomial::new(1, 0, 0), a),
                (Monomial::new(0, 1, 0), b),
                (Monomial::new(0, 0, 1), c),
            ],
        )
        .expect("degree one terms")
    }

    pub fn linear_i64(a: i64, b: i64, c: i64) -> Self {
        Self::linear(a.into_rational(), b.into_rational(), c.into_rational())
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I>(degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: m.degree(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn from_i64_terms(degree: u32, terms: &[(i64, [u32; 3])]) -> Result<Self> {
        Self::from_terms(
            degree,
            terms
                .iter()
                .map(|&(c, e)| (Monomial(e), c.into_rational())),
        )
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in graded-lex order, largest monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest monomial with a nonzero coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        HomogeneousPolynomial {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Product of a list of forms (the empty product is 1).
    pub fn product<'a, I>(factors: I) -> Self
    where
        I: IntoIterator<Item = &'a HomogeneousPolynomial>,
    {
        factors.into_iter().fold(Self::one(), |acc, f| acc.mul(f))
    }

    /// Partial derivative with respect to variable `v`.
    pub fn partial(&self, v: usize) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.0[v];
            if e == 0 {
                continue;
            }
            let mut n = *m;
            n.0[v] -= 1;
            out.add_term(n, c * Rational::from_integer(e.into()));
        }
        out
    }

    /// The three partial derivatives (∂x f, ∂y f, ∂z f).
    pub fn partials(&self) -> Result<[Self; 3]> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok([self.partial(0), self.partial(1), self.partial(2)])
    }

    pub fn evaluate(&self, point: &[Rational; 3]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            total += t;
        }
        total
    }

    /// Coordinates in the graded-lex basis of degree `d`.
    pub fn coefficient_vector(&self, d: u32) -> Result<Vec<Rational>> {
        if d != self.degree {
            return Err(Error::DegreeMismatch {
                expected: d,
                found: self.degree,
            });
        }
        let mut v = vec![Rational::zero(); monomial_count(d)];
        for (m, c) in &self.terms {
            v[m.index()] = c.clone();
        }
        Ok(v)
    }

    pub fn from_coefficient_vector(d: u32, v: &[Rational]) -> Result<Self> {
        if v.len() != monomial_count(d) {
            return Err(Error::LengthMismatch {
                expected: monomial_count(d),
                found: v.len(),
            });
        }
        Self::from_terms(d, monomials(d).into_iter().zip(v.iter().cloned()))
    }

    /// Exact quotient `self / divisor`; errors when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (lm, lc) = divisor.leading().ok_or(Error::ZeroPolynomial)?;
        if divisor.degree > self.degree {
            return Err(Error::Inconsistent("divisor degree too large".into()));
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.degree - divisor.degree);
        while let Some((m, c)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            let q_m = m
                .div(lm)
                .ok_or_else(|| Error::Inconsistent("polynomial division leaves a remainder".into()))?;
            let q_c = c / lc;
            let step = divisor.mul(&Self::monomial(q_m, q_c.clone()));
            rem = rem.sub(&step)?;
            quot.add_term(q_m, q_c);
        }
        Ok(quot)
    }

    /// True when `self = c · other` for some nonzero rational c.
    pub fn equal_up_to_scalar(&self, other: &Self) -> bool {
        if self.degree != other.degree || self.terms.len() != other.terms.len() {
            return false;
        }
        let (Some((m1, c1)), Some((m2, c2))) = (self.leading(), other.leading()) else {
            return self.is_zero() && other.is_zero();
        };
        if m1 != m2 {
            return false;
        }
        let ratio = c1 / c2;
        self.terms
            .iter()
            .all(|(m, c)| other.terms.get(m).is_some_and(|d| &(d * &ratio) == c))
    }

    /// Integer coefficient vector with content one and the sign of `self`.
    pub fn primitive_integer_coefficients(&self) -> Vec<BigInt> {
        let v = self
            .coefficient_vector(self.degree)
            .expect("own degree");
        primitive_integer_vector(&v)
    }

    /// Content-one integer multiple whose leading coefficient is positive.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut ints = self.primitive_integer_coefficients();
        if ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
            for v in ints.iter_mut() {
                *v = -&*v;
            }
        }
        Self::from_coefficient_vector(
            self.degree,
            &ints.into_iter().map(Rational::from_integer).collect::<Vec<_>>(),
        )
        .expect("matching length")
    }

    pub fn to_dense(&self) -> DenseForm {
        DenseForm::from_polynomial(self)
    }

    /// Substitutes the three components of `map` for x, y, z.
    pub fn pullback(&self, map: &super::map::PolynomialMap) -> Self {
        map.pull_back(self)
    }
}

/// Convenience conversion into [`Rational`].
pub trait IntoRational {
    fn into_rational(self) -> Rational;
}

impl IntoRational for i64 {
    fn into_rational(self) -> Rational {
        Rational::from_integer(self.into())
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let is_const = m.degree() == 0;
            if a.is_one() {
                if is_const {
                    write!(f, "1")?;
                } else {
                    write!(f, "{m}")?;
                }
            } else if is_const {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}
