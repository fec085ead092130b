//! Galois-stable groups of collinear points.
//!
//! Duals of lines such as x − ζ^a·y need roots of unity. An orbit keeps
//! them rational: it is the set of points with one coordinate zero, a
//! second coordinate one and the third running over the roots of a
//! squarefree rational polynomial.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::rational::Rational;
use crate::poly::{HomogeneousPolynomial, Monomial};

/// Univariate rational polynomial, coefficients from degree 0 upwards.
pub type Uni = Vec<Rational>;

pub fn uni_trim(mut a: Uni) -> Uni {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub fn uni_mul(a: &[Rational], b: &[Rational]) -> Uni {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    uni_trim(out)
}

/// Remainder of `a` modulo nonzero `g`.
pub fn uni_rem(a: &[Rational], g: &[Rational]) -> Uni {
    let mut r = uni_trim(a.to_vec());
    let dg = g.len() - 1;
    let lg = g[dg].clone();
    while r.len() > dg {
        let dr = r.len() - 1;
        let q = &r[dr] / &lg;
        for (i, gc) in g.iter().enumerate() {
            r[dr - dg + i] -= &q * gc;
        }
        r = uni_trim(r);
    }
    r
}

pub fn uni_gcd(a: &[Rational], b: &[Rational]) -> Uni {
    let (mut a, mut b) = (uni_trim(a.to_vec()), uni_trim(b.to_vec()));
    while !b.is_empty() {
        let r = uni_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(l) = a.last().cloned() {
        for c in a.iter_mut() {
            *c = &*c / &l;
        }
    }
    a
}

pub fn uni_derivative(a: &[Rational]) -> Uni {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
        .collect()
}

pub fn uni_eval(a: &[Rational], t: &Rational) -> Rational {
    a.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
}

fn monic(a: Uni) -> Uni {
    let a = uni_trim(a);
    match a.last().cloned() {
        Some(l) => a.into_iter().map(|c| c / &l).collect(),
        None => a,
    }
}

/// Points (coordinate `zero` = 0, coordinate `unit` = 1, coordinate
/// `free` = t) for every root t of `poly`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointOrbit {
    pub zero: usize,
    pub unit: usize,
    pub free: usize,
    poly: Uni,
}

impl PointOrbit {
    pub fn new(zero: usize, unit: usize, free: usize, poly: Uni) -> Result<Self> {
        let mut idx = [zero, unit, free];
        idx.sort_unstable();
        if idx != [0, 1, 2] {
            return Err(Error::InvalidParameter("orbit axes must be a permutation".into()));
        }
        let poly = monic(poly);
        if poly.len() < 2 {
            return Err(Error::InvalidParameter("orbit polynomial must have positive degree".into()));
        }
        if uni_gcd(&poly, &uni_derivative(&poly)).len() > 1 {
            return Err(Error::InvalidParameter("orbit polynomial must be squarefree".into()));
        }
        Ok(PointOrbit {
            zero,
            unit,
            free,
            poly,
        })
    }

    /// Monic defining polynomial.
    pub fn poly(&self) -> &[Rational] {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.len() - 1
    }

    /// Whether the rational point lies in the orbit.
    pub fn contains(&self, p: &[Rational; 3]) -> bool {
        p[self.zero].is_zero()
            && !p[self.unit].is_zero()
            && uni_eval(&self.poly, &(&p[self.free] / &p[self.unit])).is_zero()
    }

    /// Coordinates of the generic orbit point as polynomials in t.
    pub fn parametrization(&self) -> [Uni; 3] {
        let mut out: [Uni; 3] = Default::default();
        out[self.unit] = vec![Rational::one()];
        out[self.free] = vec![Rational::zero(), Rational::one()];
        out
    }

    /// Product of the dual lines X_unit + t·X_free over all roots t.
    pub fn dual_factor(&self) -> HomogeneousPolynomial {
        let e = self.degree();
        let terms = self.poly.iter().enumerate().map(|(k, g)| {
            let mut m = [0u32; 3];
            m[self.unit] = k as u32;
            m[self.free] = (e - k) as u32;
            let sign = if (e - k).is_multiple_of(2) { g.clone() } else { -g.clone() };
            (Monomial(m), sign)
        });
        HomogeneousPolynomial::from_terms(e as u32, terms).expect("degree e terms")
    }

    /// The polynomial whose roots are the orbit's points written in the
    /// frame with the roles of `unit` and `free` swapped (points with
    /// t = 0 drop out).
    fn swapped_poly(&self) -> Uni {
        let mut g = self.poly.clone();
        while g.first().is_some_and(|c| c.is_zero()) {
            g.remove(0);
        }
        g.reverse();
        monic(g)
    }

    /// Whether two orbits share a point.
    pub fn meets(&self, other: &PointOrbit) -> bool {
        if self.zero != other.zero {
            return false;
        }
        let g = if self.unit == other.unit {
            other.poly.clone()
        } else {
            other.swapped_poly()
        };
        g.len() > 1 && uni_gcd(&self.poly, &g).len() > 1
    }
}
