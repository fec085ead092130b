//! Probabilistic test that a form has no repeated factor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::monomial::monomials;
use super::polynomial::HomogeneousPolynomial;
use crate::error::{Error, Result};

/// Univariate integer polynomial, coefficients from degree 0 upwards.
type Uni = Vec<BigInt>;

fn trim(mut a: Uni) -> Uni {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn uni_mul(a: &Uni, b: &Uni) -> Uni {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn primitive_part(a: Uni) -> Uni {
    let g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return a;
    }
    a.into_iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder of `a` by nonzero `b`.
fn pseudo_rem(a: &Uni, b: &Uni) -> Uni {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bc;
        }
        r = trim(r);
    }
    r
}

/// Degree of gcd(a, b) over the rationals, by the primitive remainder
/// sequence.
fn gcd_degree(a: &Uni, b: &Uni) -> usize {
    let (mut a, mut b) = (primitive_part(trim(a.clone())), primitive_part(trim(b.clone())));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive_part(pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

/// Restriction t ↦ f(P + tQ) as a univariate integer polynomial.
fn restrict(f: &HomogeneousPolynomial, p: &[i64; 3], q: &[i64; 3]) -> Uni {
    let d = f.degree() as usize;
    let coeffs = f.primitive_integer_coefficients();
    let lines: Vec<Uni> = (0..3)
        .map(|v| vec![BigInt::from(p[v]), BigInt::from(q[v])])
        .collect();
    let powers: Vec<Vec<Uni>> = lines
        .iter()
        .map(|l| {
            let mut pw = vec![vec![BigInt::one()]];
            for k in 1..=d {
                pw.push(uni_mul(&pw[k - 1], l));
            }
            pw
        })
        .collect();
    let mut out = vec![BigInt::zero(); d + 1];
    for (m, c) in monomials(d as u32).iter().zip(&coeffs) {
        if c.is_zero() {
            continue;
        }
        let [i, j, k] = m.0.map(|e| e as usize);
        let t = uni_mul(&uni_mul(&powers[0][i], &powers[1][j]), &powers[2][k]);
        for (o, x) in out.iter_mut().zip(&t) {
            *o += c * x;
        }
    }
    trim(out)
}

/// Restricts `f` to `trials` random lines and checks each restriction is
/// squarefree as a binary form. A non-reduced form fails every trial.
pub fn is_reduced_probabilistic(f: &HomogeneousPolynomial, trials: usize, seed: u64) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree() as usize;
    if d <= 1 {
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let p: [i64; 3] = std::array::from_fn(|_| rng.random_range(-1000..=1000));
        let q: [i64; 3] = std::array::from_fn(|_| rng.random_range(-1000..=1000));
        let g = restrict(f, &p, &q);
        if g.len() < d {
            // a root of multiplicity at least two at t = ∞, or g ≡ 0
            return Ok(false);
        }
        let dg: Uni = g
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * i)
            .collect();
        if gcd_degree(&g, &dg) > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_polynomial as p;

    #[test]
    fn examples() {
        assert!(!is_reduced_probabilistic(&p("x^2*y").unwrap(), 5, 1).unwrap());
        assert!(is_reduced_probabilistic(&p("x*y*z").unwrap(), 5, 1).unwrap());
        let fermat = p("(x^3 - y^3)*(y^3 - z^3)*(z^3 - x^3)").unwrap();
        assert!(is_reduced_probabilistic(&fermat, 5, 1).unwrap());
        let sq = p("(x^2 + y*z)^2*(x + y + z)").unwrap();
        assert!(!is_reduced_probabilistic(&sq, 5, 7).unwrap());
    }

    #[test]
    fn gcd_degrees() {
        let a: Uni = [-1, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        let b: Uni = [1, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(gcd_degree(&a, &b), 1);
        let c: Uni = [2, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(gcd_degree(&a, &c), 0);
    }
}
