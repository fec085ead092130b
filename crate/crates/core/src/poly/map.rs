use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::dense::DenseForm;
use super::monomial::{monomials, Monomial};
use super::polynomial::HomogeneousPolynomial;
use crate::error::{Error, Result};
use crate::linalg::rational::{denominator_lcm, Rational};

/// A map (x : y : z) ↦ (g₁ : g₂ : g₃) given by forms of one common degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialMap {
    components: [HomogeneousPolynomial; 3],
}

impl PolynomialMap {
    pub fn new(components: [HomogeneousPolynomial; 3]) -> Result<Self> {
        let d = components[0].degree();
        for g in &components[1..] {
            if g.degree() != d {
                return Err(Error::DegreeMismatch {
                    expected: d,
                    found: g.degree(),
                });
            }
        }
        if components.iter().all(|g| g.is_zero()) {
            return Err(Error::ZeroPolynomial);
        }
        Ok(PolynomialMap { components })
    }

    pub fn identity() -> Self {
        PolynomialMap {
            components: [
                HomogeneousPolynomial::x(),
                HomogeneousPolynomial::y(),
                HomogeneousPolynomial::z(),
            ],
        }
    }

    /// The Kummer cover (x : y : z) ↦ (x^k : y^k : z^k).
    pub fn kummer(k: u32) -> Self {
        let c = |v: usize| {
            let mut e = [0; 3];
            e[v] = k;
            HomogeneousPolynomial::monomial(Monomial(e), Rational::one())
        };
        PolynomialMap {
            components: [c(0), c(1), c(2)],
        }
    }

    /// The linear substitution whose i-th component is Σ_j m[i][j]·x_j.
    pub fn linear(m: &[[Rational; 3]; 3]) -> Result<Self> {
        let comps = m
            .iter()
            .map(|r| HomogeneousPolynomial::linear(r[0].clone(), r[1].clone(), r[2].clone()))
            .collect::<Vec<_>>();
        Self::new(comps.try_into().expect("three rows"))
    }

    pub fn degree(&self) -> u32 {
        self.components[0].degree()
    }

    pub fn components(&self) -> &[HomogeneousPolynomial; 3] {
        &self.components
    }

    /// Image of a point given by its coordinates.
    pub fn apply(&self, point: &[Rational; 3]) -> [Rational; 3] {
        [
            self.components[0].evaluate(point),
            self.components[1].evaluate(point),
            self.components[2].evaluate(point),
        ]
    }

    /// f(g₁, g₂, g₃).
    pub fn pull_back(&self, f: &HomogeneousPolynomial) -> HomogeneousPolynomial {
        let e = self.degree();
        let d = f.degree();
        if f.is_zero() {
            return HomogeneousPolynomial::zero(d * e);
        }
        let (fd, f_scale) = DenseForm::from_polynomial_scaled(f);
        let all: Vec<Rational> = self
            .components
            .iter()
            .flat_map(|g| g.coefficient_vector(e).expect("own degree"))
            .collect();
        let s = denominator_lcm(&all);
        let g: Vec<DenseForm> = self
            .components
            .iter()
            .map(|gi| {
                let v = gi.coefficient_vector(e).expect("own degree");
                DenseForm {
                    degree: e,
                    coeffs: v.iter().map(|q| q.numer() * (&s / q.denom())).collect(),
                }
            })
            .collect();
        let powers: Vec<Vec<DenseForm>> = g
            .iter()
            .map(|gi| {
                let mut pw = vec![DenseForm {
                    degree: 0,
                    coeffs: vec![BigInt::one()],
                }];
                for k in 1..=d as usize {
                    let next = pw[k - 1].mul(gi);
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut tail: HashMap<(u32, u32), DenseForm> = HashMap::new();
        let mut out = DenseForm::zero(d * e);
        for (m, c) in monomials(d).iter().zip(&fd.coeffs) {
            if c.is_zero() {
                continue;
            }
            let [i, j, k] = m.0;
            let t = tail
                .entry((j, k))
                .or_insert_with(|| powers[1][j as usize].mul(&powers[2][k as usize]));
            let term = powers[0][i as usize].mul(t);
            out.add_scaled(&term, c);
        }
        out.to_polynomial_over(&(f_scale * s.pow(d)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_polynomial as p;

    #[test]
    fn kummer_examples() {
        let f = p("x*y + z^2").unwrap();
        assert_eq!(f.pullback(&PolynomialMap::kummer(2)), p("x^2*y^2 + z^4").unwrap());
        assert_eq!(f.pullback(&PolynomialMap::kummer(3)), p("x^3*y^3 + z^6").unwrap());
        assert_eq!(p("x").unwrap().pullback(&PolynomialMap::kummer(5)), p("x^5").unwrap());
    }

    #[test]
    fn identity_and_rational_maps() {
        let f = p("3/2*x^3 - x*y*z + 7*z^3").unwrap();
        assert_eq!(f.pullback(&PolynomialMap::identity()), f);
        let m = PolynomialMap::new([p("1/2*x + y").unwrap(), p("z").unwrap(), p("x - 1/3*y").unwrap()])
            .unwrap();
        let direct = p("3/2*(1/2*x + y)^3 - (1/2*x + y)*z*(x - 1/3*y) + 7*(x - 1/3*y)^3").unwrap();
        assert_eq!(f.pullback(&m), direct);
    }

    #[test]
    fn rejects_bad_maps() {
        assert!(PolynomialMap::new([p("x").unwrap(), p("y^2").unwrap(), p("z").unwrap()]).is_err());
        let z = HomogeneousPolynomial::zero(1);
        assert!(PolynomialMap::new([z.clone(), z.clone(), z]).is_err());
    }
}
