//! Linear algebra modulo word-size primes.
//!
//! Entries are stored reduced as `u32`; elimination accumulates products in
//! `u64` and only reduces every [`LAZY_LIMIT`] updates. With primes below
//! 2^30 a product is below 2^60, so fifteen of them fit next to a reduced
//! value without overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::par::{self, ExecMode};

/// Updates a row may receive before it must be reduced.
pub const LAZY_LIMIT: u32 = 15;

const PRIME_CEILING: u64 = 1 << 30;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The `index`-th prime below 2^30, counting downwards from the top.
pub fn prime(index: usize) -> u64 {
    let mut found = 0;
    let mut n = PRIME_CEILING - 1;
    loop {
        if is_prime(n) {
            if found == index {
                return n;
            }
            found += 1;
        }
        n -= 2;
    }
}

pub fn reduce(v: &BigInt, p: u64) -> u32 {
    v.mod_floor(&BigInt::from(p))
        .to_u32()
        .expect("residue below 2^30")
}

pub fn reduce_i64(v: i64, p: u64) -> u32 {
    v.rem_euclid(p as i64) as u32
}

/// Dense matrix of residues modulo `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

impl ModMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        ModMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(p: u64, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        ModMatrix {
            p,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_integer_rows(p: u64, cols: usize, rows: &[Vec<BigInt>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().map(|v| reduce(v, p)));
        }
        ModMatrix {
            p,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn echelon(&self) -> ModEchelon {
        self.echelon_with(ExecMode::default())
    }

    /// Row echelon form by Gaussian elimination with parallel row updates.
    ///
    /// The pivot row for a column is the first remaining row with a nonzero
    /// entry, so the result is the same in every execution mode.
    pub fn echelon_with(&self, mode: ExecMode) -> ModEchelon {
        let p = self.p;
        let cols = self.cols;
        let mut work: Vec<(usize, Vec<u64>)> = (0..self.rows)
            .map(|i| (i, self.row(i).iter().map(|&v| v as u64).collect()))
            .collect();
        let mut out_rows = Vec::new();
        let mut pivots = Vec::new();
        let mut origins = Vec::new();
        let mut lazy = 0u32;
        let mut r = 0;
        for c in 0..cols {
            if r == work.len() {
                break;
            }
            let mut sel = None;
            for (i, (_, row)) in work.iter_mut().enumerate().skip(r) {
                row[c] %= p;
                if sel.is_none() && row[c] != 0 {
                    sel = Some(i);
                }
            }
            let Some(s) = sel else { continue };
            work.swap(r, s);
            let (top, rest) = work.split_at_mut(r + 1);
            let (origin, prow) = &mut top[r];
            let inv = inv_mod(prow[c], p);
            let pivot: Vec<u32> = prow[c..]
                .iter()
                .map(|&v| mul_mod(v % p, inv, p) as u32)
                .collect();
            let reduce_now = lazy + 1 == LAZY_LIMIT;
            par::for_each_mut(mode, rest, |(_, row)| {
                let g = row[c] % p;
                if g != 0 {
                    let g = p - g;
                    for (x, &b) in row[c..].iter_mut().zip(&pivot) {
                        *x += g * b as u64;
                    }
                }
                if reduce_now {
                    for x in row[c..].iter_mut() {
                        *x %= p;
                    }
                }
            });
            lazy = if reduce_now { 0 } else { lazy + 1 };
            let mut full = vec![0u32; cols];
            full[c..].copy_from_slice(&pivot);
            out_rows.push(full);
            pivots.push(c);
            origins.push(*origin);
            r += 1;
        }
        ModEchelon {
            p,
            cols,
            rows: out_rows,
            pivots,
            origins,
        }
    }
}

/// Row echelon form modulo a prime: normalized pivot rows sorted by pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModEchelon {
    pub p: u64,
    pub cols: usize,
    /// Basis rows with a one in the pivot position and zeros before it.
    pub rows: Vec<Vec<u32>>,
    pub pivots: Vec<usize>,
    /// Index of the input row each basis row descends from.
    pub origins: Vec<usize>,
}

impl ModEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Kernel vector with a one at the free column `f` and zeros at the
    /// other free columns.
    pub fn kernel_vector(&self, f: usize) -> Vec<u32> {
        let p = self.p;
        let mut x = vec![0u64; self.cols];
        x[f] = 1;
        for (row, &pc) in self.rows.iter().zip(&self.pivots).rev() {
            let s = dot_mod(&row[pc + 1..], &x[pc + 1..], p);
            x[pc] = (p - s) % p;
        }
        x.into_iter().map(|v| v as u32).collect()
    }

    /// Canonical kernel basis, one vector per free column in order.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        self.kernel_basis_with(ExecMode::default())
    }

    pub fn kernel_basis_with(&self, mode: ExecMode) -> Vec<Vec<u32>> {
        let free = self.free_columns();
        par::map(mode, &free, |&f| self.kernel_vector(f))
    }
}

/// Dot product of residues `< 2^30`, reduced modulo `p`.
pub fn dot_mod(a: &[u32], b: &[u64], p: u64) -> u64 {
    let mut total = 0u64;
    for (ca, cb) in a.chunks(8).zip(b.chunks(8)) {
        let s: u64 = ca.iter().zip(cb).map(|(&u, &v)| u as u64 * v).sum();
        total = (total + s % p) % p;
    }
    total
}

/// Incrementally maintained row echelon basis of a subspace of `F_p^n`.
///
/// Used when vectors must be examined one at a time, for instance to keep
/// the first vectors of a list that enlarge a given span.
#[derive(Debug, Clone)]
pub struct IncrementalBasis {
    p: u64,
    cols: usize,
    rows: Vec<Vec<u32>>,
    row_of_pivot: Vec<Option<usize>>,
    scratch: Vec<u64>,
}

impl IncrementalBasis {
    pub fn new(p: u64, cols: usize) -> Self {
        IncrementalBasis {
            p,
            cols,
            rows: Vec::new(),
            row_of_pivot: vec![None; cols],
            scratch: vec![0; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Adds `v` and reports whether it enlarged the span.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.cols);
        let p = self.p;
        let x = &mut self.scratch;
        for (s, &e) in x.iter_mut().zip(v) {
            *s = e as u64;
        }
        let mut lazy = 0u32;
        for c in 0..self.cols {
            x[c] %= p;
            if x[c] == 0 {
                continue;
            }
            match self.row_of_pivot[c] {
                Some(ri) => {
                    let g = p - x[c];
                    let b = &self.rows[ri];
                    for (t, &bv) in x[c..].iter_mut().zip(&b[c..]) {
                        *t += g * bv as u64;
                    }
                    lazy += 1;
                    if lazy == LAZY_LIMIT {
                        for t in x[c..].iter_mut() {
                            *t %= p;
                        }
                        lazy = 0;
                    }
                }
                None => {
                    let inv = inv_mod(x[c], p);
                    let mut row = vec![0u32; self.cols];
                    for (j, t) in x.iter().enumerate().skip(c) {
                        row[j] = mul_mod(t % p, inv, p) as u32;
                    }
                    self.row_of_pivot[c] = Some(self.rows.len());
                    self.rows.push(row);
                    return true;
                }
            }
        }
        false
    }

    /// Whether `v` lies in the current span, without modifying it.
    pub fn contains(&self, v: &[u32]) -> bool {
        let mut probe = self.clone();
        !probe.insert(v)
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }
}

/// Inverse of a square matrix modulo `p`, or `None` when singular.
pub fn inverse(m: &ModMatrix) -> Option<ModMatrix> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let p = m.p;
    let mut aug = ModMatrix::zeros(p, n, 2 * n);
    for i in 0..n {
        aug.row_mut(i)[..n].copy_from_slice(m.row(i));
        aug.set(i, n + i, 1);
    }
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|i| aug.row(i).iter().map(|&v| v as u64).collect())
        .collect();
    for c in 0..n {
        let s = (c..n).find(|&i| !a[i][c].is_multiple_of(p))?;
        a.swap(c, s);
        let inv = inv_mod(a[c][c] % p, p);
        let pivot: Vec<u64> = a[c].iter().map(|&v| mul_mod(v % p, inv, p)).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i == c {
                continue;
            }
            let g = row[c] % p;
            if g == 0 {
                continue;
            }
            let g = p - g;
            for (x, &b) in row.iter_mut().zip(&pivot) {
                *x = (*x % p + g * b) % p;
            }
        }
        a[c] = pivot;
    }
    let mut out = ModMatrix::zeros(p, n, n);
    for (i, row) in a.iter().enumerate() {
        for j in 0..n {
            out.set(i, j, (row[n + j] % p) as u32);
        }
    }
    Some(out)
}
