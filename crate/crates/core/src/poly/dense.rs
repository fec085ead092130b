//! Dense integer forms for the heavy inner loops.

use num_bigint::BigInt;
use num_traits::Zero;

use super::monomial::{monomial_count, monomials, Monomial};
use super::polynomial::HomogeneousPolynomial;
use crate::linalg::rational::{clear_denominators, Rational};

/// Homogeneous form with integer coefficients stored densely in graded-lex
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseForm {
    pub degree: u32,
    pub coeffs: Vec<BigInt>,
}

impl DenseForm {
    pub fn zero(degree: u32) -> Self {
        DenseForm {
            degree,
            coeffs: vec![BigInt::zero(); monomial_count(degree)],
        }
    }

    /// Primitive integer multiple of `p` (positive scale).
    pub fn from_polynomial(p: &HomogeneousPolynomial) -> Self {
        DenseForm {
            degree: p.degree(),
            coeffs: p.primitive_integer_coefficients(),
        }
    }

    /// Integer multiple `s·p` together with the positive scale `s`.
    pub fn from_polynomial_scaled(p: &HomogeneousPolynomial) -> (Self, BigInt) {
        let v = p.coefficient_vector(p.degree()).expect("own degree");
        let scale = crate::linalg::rational::denominator_lcm(&v);
        (
            DenseForm {
                degree: p.degree(),
                coeffs: clear_denominators(&v),
            },
            scale,
        )
    }

    /// The polynomial `self / divisor`.
    pub fn to_polynomial_over(&self, divisor: &BigInt) -> HomogeneousPolynomial {
        let v: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| Rational::new(c.clone(), divisor.clone()))
            .collect();
        HomogeneousPolynomial::from_coefficient_vector(self.degree, &v).expect("matching length")
    }

    pub fn to_polynomial(&self) -> HomogeneousPolynomial {
        self.to_polynomial_over(&BigInt::from(1))
    }

    pub fn mul(&self, other: &DenseForm) -> DenseForm {
        let da = monomials(self.degree);
        let db = monomials(other.degree);
        let mut out = DenseForm::zero(self.degree + other.degree);
        for (ma, ca) in da.iter().zip(&self.coeffs) {
            if ca.is_zero() {
                continue;
            }
            for (mb, cb) in db.iter().zip(&other.coeffs) {
                if cb.is_zero() {
                    continue;
                }
                out.coeffs[ma.mul(mb).index()] += ca * cb;
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &DenseForm, c: &BigInt) {
        assert_eq!(self.degree, other.degree);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += b * c;
            }
        }
    }

    pub fn partial(&self, v: usize) -> DenseForm {
        let mut out = DenseForm::zero(self.degree.saturating_sub(1));
        if self.degree == 0 {
            return out;
        }
        for (m, c) in monomials(self.degree).iter().zip(&self.coeffs) {
            let e = m.0[v];
            if e == 0 || c.is_zero() {
                continue;
            }
            let mut n = *m;
            n.0[v] -= 1;
            out.coeffs[n.index()] = c * e;
        }
        out
    }

    pub fn coefficient(&self, m: &Monomial) -> &BigInt {
        &self.coeffs[m.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}
