#![allow(dead_code)]

use freecurves::arrangements::{self, named, PointSet};
use freecurves::linalg::Rational;
use freecurves::poly::{monomials, HomogeneousPolynomial, Monomial, PolynomialMap};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Example {
    pub name: String,
    pub curve: HomogeneousPolynomial,
    pub lines: bool,
}

fn ex(name: &str, curve: HomogeneousPolynomial, lines: bool) -> Example {
    Example {
        name: name.to_string(),
        curve,
        lines,
    }
}

/// The named example curves.
pub fn curves() -> Vec<Example> {
    let mut out = Vec::new();
    for n in 3..=6 {
        out.push(ex(&format!("NF{n}"), arrangements::fermat_deleted(n).unwrap(), true));
    }
    for n in 3..=4 {
        out.push(ex(&format!("fermat{n}"), arrangements::fermat(n).unwrap().polynomial, true));
    }
    for k in 2..=4 {
        out.push(ex(&format!("conic_family{k}"), arrangements::conic_family(k).unwrap(), false));
    }
    out.push(ex("A9", HomogeneousPolynomial::x().mul(&named::maclane_lines()), true));
    out.push(ex("maclane_lines", named::maclane_lines(), true));
    out.push(ex("klein_decic", named::klein_decic(), false));
    out.push(ex("four_conics", named::four_conics(), false));
    out.push(ex("chmn19", named::chmn19(), true));
    out.push(ex("Z18 dual", named::z18().dual_polynomial(), true));
    out.push(ex("Z17 dual", named::z17().dual_polynomial(), true));
    out.push(ex("NF7 minus y-z", named::fermat_deleted_twice(7).unwrap(), true));
    out.push(ex("maclane_conics", named::maclane_conics(), false));
    out
}

/// The named example point sets.
pub fn point_sets() -> Vec<(String, PointSet)> {
    let mut out = vec![
        ("triangle".to_string(), named::triangle()),
        ("Z18".to_string(), named::z18()),
        ("Z17".to_string(), named::z17()),
        ("chmn19 dual".to_string(), named::chmn19_dual()),
    ];
    for n in 3..=8 {
        out.push((format!("NF{n} dual"), named::fermat_deleted_dual(n).unwrap()));
    }
    out.push(("NF7 minus y-z dual".to_string(), named::fermat_deleted_twice_dual(7).unwrap()));
    out
}

fn det3(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// A random invertible integer substitution with entries in [−2, 2].
pub fn random_substitution(rng: &mut ChaCha8Rng) -> PolynomialMap {
    loop {
        let m: [[i64; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| rng.random_range(-2..=2)));
        if det3(&m) != 0 {
            let r = m.map(|row| row.map(|v| Rational::from_integer(BigInt::from(v))));
            return PolynomialMap::linear(&r).unwrap();
        }
    }
}

/// A random nonzero form of degree 1 to 6 with small rational coefficients.
pub fn random_polynomial(rng: &mut ChaCha8Rng) -> HomogeneousPolynomial {
    let d = rng.random_range(1..=6u32);
    loop {
        let mut terms: Vec<(Monomial, Rational)> = Vec::new();
        for m in monomials(d) {
            if rng.random_bool(0.6) {
                let num = BigInt::from(rng.random_range(-9..=9));
                let den = BigInt::from(rng.random_range(1..=4));
                terms.push((m, Rational::new(num, den)));
            }
        }
        let f = HomogeneousPolynomial::from_terms(d, terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rank by plain fraction Gaussian elimination, independent of the
/// library's fraction-free and modular eliminations.
pub fn gauss_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for j in c..cols {
                let t = &f * &pivot[j];
                row[j] -= t;
            }
        }
        rank += 1;
    }
    rank
}
