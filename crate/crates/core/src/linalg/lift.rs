//! Exact kernel vectors of integer matrices by p-adic lifting.
//!
//! A kernel vector found modulo a prime fixes a nonsingular square block of
//! the matrix. Solving that block over the rationals by Dixon iteration and
//! rational reconstruction gives a candidate, which is accepted only after
//! an exact check against every row of the original matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modular::{inverse, reduce, ModEchelon, ModMatrix};
use super::rational::{make_primitive, Rational};
use crate::error::{Error, Result};

/// Reconstructs `n/d ≡ u (mod m)` with `|n|, d ≤ sqrt(m/2)`.
pub fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound: BigInt = (m >> 1u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

/// Integer matrix stored as dense rows.
pub type IntRows = [Vec<BigInt>];

fn exact_kernel_check(a: &IntRows, v: &[BigInt]) -> bool {
    a.iter().all(|row| {
        row.iter()
            .zip(v)
            .filter(|(x, y)| !x.is_zero() && !y.is_zero())
            .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
            .is_zero()
    })
}

/// Lifts the modular kernel vectors attached to `free` columns of `ech`
/// (the echelon form of `a` modulo `ech.p`) to primitive integer vectors in
/// the rational kernel of `a`.
///
/// Fails when the prime turns out to be unlucky for `a`.
pub fn lift_kernel_vectors(a: &IntRows, ech: &ModEchelon, free: &[usize]) -> Result<Vec<Vec<BigInt>>> {
    let p = ech.p;
    let r = ech.rank();
    let cols = ech.cols;
    if free.is_empty() {
        return Ok(Vec::new());
    }
    let block: Vec<Vec<BigInt>> = ech
        .origins
        .iter()
        .map(|&i| ech.pivots.iter().map(|&c| a[i][c].clone()).collect())
        .collect();
    let block_mod = ModMatrix::from_integer_rows(p, r, &block);
    let inv = inverse(&block_mod)
        .ok_or_else(|| Error::Diagnostic("pivot block singular modulo p".into()))?;
    let inv_rows: Vec<Vec<u32>> = (0..r).map(|i| inv.row(i).to_vec()).collect();

    let mut out = Vec::with_capacity(free.len());
    for &f in free {
        let rhs: Vec<BigInt> = ech.origins.iter().map(|&i| -&a[i][f]).collect();
        let sol = dixon_solve(&block, &inv_rows, p, &rhs, |x| {
            let mut v = vec![BigInt::zero(); cols];
            let den = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            for (q, &c) in x.iter().zip(&ech.pivots) {
                v[c] = q.numer() * (&den / q.denom());
            }
            v[f] = den;
            if exact_kernel_check(a, &v) {
                Some(make_primitive(v))
            } else {
                None
            }
        })?;
        out.push(sol);
    }
    Ok(out)
}

/// Solves `block · x = rhs` over the rationals, handing each reconstructed
/// candidate to `accept` until it returns a value.
fn dixon_solve<T>(
    block: &[Vec<BigInt>],
    inv: &[Vec<u32>],
    p: u64,
    rhs: &[BigInt],
    mut accept: impl FnMut(&[Rational]) -> Option<T>,
) -> Result<T> {
    let r = block.len();
    if r == 0 {
        return accept(&[]).ok_or_else(|| Error::Diagnostic("empty lift rejected".into()));
    }
    let pb = BigInt::from(p);
    let mut residual = rhs.to_vec();
    let mut acc = vec![BigInt::zero(); r];
    let mut modulus = BigInt::one();
    let mut next_check = 4usize;
    let max_steps = 20_000usize;
    let mut rejected: Option<Vec<Rational>> = None;
    for step in 1..=max_steps {
        let c: Vec<u64> = residual.iter().map(|v| reduce(v, p) as u64).collect();
        let y: Vec<u64> = inv
            .iter()
            .map(|row| super::modular::dot_mod(row, &c, p))
            .collect();
        for (a, &yi) in acc.iter_mut().zip(&y) {
            if yi != 0 {
                *a += &modulus * yi;
            }
        }
        modulus *= &pb;
        for (res, brow) in residual.iter_mut().zip(block) {
            let mut s = std::mem::take(res);
            for (b, &yi) in brow.iter().zip(&y) {
                if yi != 0 && !b.is_zero() {
                    s -= b * yi;
                }
            }
            debug_assert!((&s % &pb).is_zero());
            *res = s / &pb;
        }
        if step == next_check {
            next_check = step + step / 2 + 1;
            if let Some(x) = reconstruct_vector(&acc, &modulus) {
                if let Some(t) = accept(&x) {
                    return Ok(t);
                }
                // the block solution has stabilized but is not a kernel vector:
                // the prime is unlucky for this matrix
                if rejected.as_ref() == Some(&x) {
                    return Err(Error::Diagnostic("lifted candidate rejected twice".into()));
                }
                rejected = Some(x);
            }
        }
    }
    Err(Error::Diagnostic("p-adic lifting did not converge".into()))
}

/// Reconstructs a whole vector, sharing denominators between entries.
fn reconstruct_vector(acc: &[BigInt], m: &BigInt) -> Option<Vec<Rational>> {
    let mut den = BigInt::one();
    let mut out = Vec::with_capacity(acc.len());
    for u in acc {
        let scaled = (u * &den).mod_floor(m);
        let q = rational_reconstruction(&scaled, m)?;
        let entry = &q / Rational::from_integer(den.clone());
        den *= q.denom();
        out.push(entry);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::modular::prime;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn reconstruction_recovers_small_fractions() {
        let m = BigInt::from(prime(0)) * BigInt::from(prime(1));
        for (n, d) in [(3i64, 7i64), (-5, 11), (0, 1), (123456, 789)] {
            let q = Rational::new(n.into(), d.into());
            let d_inv = modinv(&BigInt::from(d), &m);
            let u = (BigInt::from(n) * d_inv).mod_floor(&m);
            assert_eq!(rational_reconstruction(&u, &m), Some(q));
        }
    }

    fn modinv(a: &BigInt, m: &BigInt) -> BigInt {
        let e = a.extended_gcd(m);
        e.x.mod_floor(m)
    }

    #[test]
    fn lifts_exact_kernel() {
        let a = ints(&[&[2, 3, 5, 7], &[1, -4, 6, 0], &[3, -1, 11, 7]]);
        let p = prime(0);
        let ech = ModMatrix::from_integer_rows(p, 4, &a).echelon();
        assert_eq!(ech.rank(), 2);
        let free = ech.free_columns();
        let vs = lift_kernel_vectors(&a, &ech, &free).unwrap();
        assert_eq!(vs.len(), 2);
        for v in &vs {
            assert!(exact_kernel_check(&a, v));
        }
    }

    #[test]
    fn lifts_with_large_entries() {
        let big = BigInt::from(10).pow(40u32);
        let a = vec![
            vec![big.clone(), BigInt::from(3), BigInt::from(-7)],
            vec![BigInt::from(1), &big + 1, BigInt::from(2)],
        ];
        let p = prime(3);
        let ech = ModMatrix::from_integer_rows(p, 3, &a).echelon();
        let vs = lift_kernel_vectors(&a, &ech, &ech.free_columns()).unwrap();
        assert_eq!(vs.len(), 1);
        assert!(exact_kernel_check(&a, &vs[0]));
    }
}
