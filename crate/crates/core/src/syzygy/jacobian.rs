//! Multiplication matrices of the partial derivatives.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::modular::{reduce, ModMatrix};
use crate::poly::monomial::count_or_zero;
use crate::poly::{monomial_count, monomials, HomogeneousPolynomial, Monomial};

/// The partial derivatives of the primitive integer multiple of f.
#[derive(Debug, Clone)]
pub struct Jacobian {
    d: u32,
    partials: [Vec<(Monomial, BigInt)>; 3],
}

impl Jacobian {
    pub fn new(f: &HomogeneousPolynomial) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let d = f.degree();
        if d == 0 {
            return Err(Error::InvalidParameter("constant form".into()));
        }
        let ints = f.primitive_integer_coefficients();
        let terms: Vec<(Monomial, BigInt)> = monomials(d)
            .into_iter()
            .zip(ints)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let partials = [0, 1, 2].map(|v| {
            terms
                .iter()
                .filter_map(|(m, c)| {
                    let e = m.0[v];
                    (e > 0).then(|| {
                        let mut n = m.0;
                        n[v] -= 1;
                        (Monomial(n), c * e)
                    })
                })
                .collect()
        });
        Ok(Jacobian { d, partials })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn partials(&self) -> &[Vec<(Monomial, BigInt)>; 3] {
        &self.partials
    }

    /// Partial i as a dense integer coefficient vector in degree d − 1.
    pub fn partial_vector(&self, i: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); monomial_count(self.d - 1)];
        for (m, c) in &self.partials[i] {
            v[m.index()] = c.clone();
        }
        v
    }

    /// Shape of the map (a, b, c) ↦ a·f_x + b·f_y + c·f_z in degree r:
    /// (rows, cols) = (C(r+d+1, 2), 3·C(r+2, 2)).
    pub fn syzygy_shape(&self, r: u32) -> (usize, usize) {
        (monomial_count(r + self.d - 1), 3 * monomial_count(r))
    }

    fn fill<T: Clone>(&self, r: u32, zero: T, conv: impl Fn(&BigInt) -> T) -> (usize, usize, Vec<T>) {
        let (rows, cols) = self.syzygy_shape(r);
        let n = monomial_count(r);
        let mut data = vec![zero; rows * cols];
        for (i, part) in self.partials.iter().enumerate() {
            let vals: Vec<(Monomial, T)> = part.iter().map(|(m, c)| (*m, conv(c))).collect();
            for (j, mu) in monomials(r).iter().enumerate() {
                let col = i * n + j;
                for (nu, c) in &vals {
                    data[mu.mul(nu).index() * cols + col] = c.clone();
                }
            }
        }
        (rows, cols, data)
    }

    /// The degree-r syzygy matrix modulo p; its kernel is Syz_r.
    pub fn syzygy_matrix_mod(&self, r: u32, p: u64) -> ModMatrix {
        let (rows, cols, data) = self.fill(r, 0u32, |c| reduce(c, p));
        ModMatrix { p, rows, cols, data }
    }

    /// The degree-r syzygy matrix over the integers, as dense rows.
    pub fn syzygy_matrix(&self, r: u32) -> Vec<Vec<BigInt>> {
        let (_, cols, data) = self.fill(r, BigInt::zero(), BigInt::clone);
        data.chunks(cols).map(<[BigInt]>::to_vec).collect()
    }

    /// Rows μ·∂_i f spanning (J_f)_k, as coefficient vectors of length
    /// C(k+2, 2), reduced modulo p.
    pub fn ideal_rows_mod(&self, k: u32, p: u64) -> ModMatrix {
        let cols = monomial_count(k);
        if k + 1 < self.d {
            return ModMatrix::zeros(p, 0, cols);
        }
        let s = k + 1 - self.d;
        let n = monomial_count(s);
        let mut m = ModMatrix::zeros(p, 3 * n, cols);
        for (i, part) in self.partials.iter().enumerate() {
            let vals: Vec<(Monomial, u32)> = part.iter().map(|(mo, c)| (*mo, reduce(c, p))).collect();
            for (j, mu) in monomials(s).iter().enumerate() {
                let row = i * n + j;
                for (nu, c) in &vals {
                    m.set(row, mu.mul(nu).index(), *c);
                }
            }
        }
        m
    }

    /// The same spanning rows over the integers.
    pub fn ideal_rows(&self, k: u32) -> Vec<Vec<BigInt>> {
        let cols = monomial_count(k);
        if k + 1 < self.d {
            return Vec::new();
        }
        let s = k + 1 - self.d;
        let mut out = Vec::new();
        for part in &self.partials {
            for mu in monomials(s) {
                let mut row = vec![BigInt::zero(); cols];
                for (nu, c) in part {
                    row[mu.mul(nu).index()] = c.clone();
                }
                out.push(row);
            }
        }
        out
    }
}

/// Multiplies a coefficient vector of degree `deg` by the monomial `lam`.
pub fn shift<T: Clone + Zero>(coeffs: &[T], deg: u32, lam: &Monomial) -> Vec<T> {
    let mut out = vec![T::zero(); count_or_zero(i64::from(deg + lam.degree())) as usize];
    if coeffs.iter().all(T::is_zero) {
        return out;
    }
    for (mu, c) in monomials(deg).iter().zip(coeffs) {
        if !c.is_zero() {
            out[mu.mul(lam).index()] = c.clone();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial as p;

    #[test]
    fn shapes_and_entries() {
        let j = Jacobian::new(&p("x*y*z").unwrap()).unwrap();
        assert_eq!(j.syzygy_shape(1), (10, 9));
        let a = j.syzygy_matrix(0);
        // columns are the three partials yz, xz, xy
        let yz = Monomial([0, 1, 1]).index();
        assert_eq!(a[yz][0], BigInt::from(1));
        let m = j.syzygy_matrix_mod(1, 101);
        assert_eq!(m.echelon().rank(), 7);
    }

    #[test]
    fn shift_multiplies() {
        let v: Vec<i64> = vec![1, 2, 0];
        let out = shift(&v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>(), 1, &Monomial([0, 1, 0]));
        // (x + 2y)·y = xy + 2y²
        assert_eq!(out[Monomial([1, 1, 0]).index()], BigInt::from(1));
        assert_eq!(out[Monomial([0, 2, 0]).index()], BigInt::from(2));
    }

    #[test]
    fn ideal_rows_below_start() {
        let j = Jacobian::new(&p("x^3 + y^3 + z^3").unwrap()).unwrap();
        assert_eq!(j.ideal_rows_mod(1, 101).rows, 0);
        assert_eq!(j.ideal_rows(2).len(), 3);
    }
}
