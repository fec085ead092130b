//! Dense rational matrices with fraction-free elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{clear_denominators, Rational};
use crate::error::{Error, Result};
use crate::par::{self, ExecMode};

/// Row-major dense matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    /// Builds a matrix with `cols` columns from a list of rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(RationalMatrix {
            rows: n,
            cols,
            entries,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Rows multiplied through by their denominator lcm.
    pub fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| clear_denominators(self.row(i))).collect()
    }

    pub fn rank(&self) -> usize {
        self.rank_with(ExecMode::default())
    }

    pub fn rank_with(&self, mode: ExecMode) -> usize {
        IntegerEchelon::new(self.integer_rows(), self.cols, mode).rank()
    }

    pub fn nullspace_basis(&self) -> Vec<Vec<Rational>> {
        self.nullspace_basis_with(ExecMode::default())
    }

    pub fn nullspace_basis_with(&self, mode: ExecMode) -> Vec<Vec<Rational>> {
        IntegerEchelon::new(self.integer_rows(), self.cols, mode).nullspace()
    }

    /// Reduced row echelon form: nonzero rows and their pivot columns.
    pub fn rref(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let e = IntegerEchelon::new(self.integer_rows(), self.cols, ExecMode::default());
        (e.reduced_rows(), e.pivots().to_vec())
    }
}

/// Dimension of the span of equal-length vectors.
pub fn subspace_dimension(vectors: &[Vec<Rational>]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    let m = RationalMatrix::from_rows(first.len(), vectors.to_vec())?;
    Ok(m.rank())
}

/// Fraction-free (Bareiss) row echelon form of an integer matrix.
///
/// Pivot rows are chosen by smallest bit length in the current column, ties
/// broken by row index. Every entry of the result is a minor of the input.
#[derive(Debug, Clone)]
pub struct IntegerEchelon {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl IntegerEchelon {
    pub fn new(mut a: Vec<Vec<BigInt>>, cols: usize, mode: ExecMode) -> Self {
        let n = a.len();
        let mut prev = BigInt::one();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == n {
                break;
            }
            let sel = (r..n)
                .filter(|&i| !a[i][c].is_zero())
                .min_by_key(|&i| (a[i][c].bits(), i));
            let Some(p) = sel else { continue };
            a.swap(r, p);
            let (top, rest) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            let pv = &pivot_row[c];
            let divisor = &prev;
            par::for_each_mut(mode, rest, |row| {
                let factor = std::mem::take(&mut row[c]);
                for j in c + 1..cols {
                    let mut v = &row[j] * pv;
                    if !factor.is_zero() && !pivot_row[j].is_zero() {
                        v -= &factor * &pivot_row[j];
                    }
                    row[j] = if divisor.is_one() { v } else { v / divisor };
                }
            });
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        IntegerEchelon {
            cols,
            rows: a,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Kernel basis: one vector per free column, that coordinate set to one
    /// and the other free coordinates to zero, ordered by free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut x = vec![Rational::zero(); self.cols];
                x[f] = Rational::one();
                for (i, &pc) in self.pivots.iter().enumerate().rev() {
                    let row = &self.rows[i];
                    let mut s = Rational::zero();
                    for j in pc + 1..self.cols {
                        if !row[j].is_zero() && !x[j].is_zero() {
                            s += &x[j] * Rational::from_integer(row[j].clone());
                        }
                    }
                    x[pc] = -s / Rational::from_integer(row[pc].clone());
                }
                x
            })
            .collect()
    }

    /// Rows of the reduced row echelon form.
    pub fn reduced_rows(&self) -> Vec<Vec<Rational>> {
        let r = self.rank();
        let mut out: Vec<Vec<Rational>> = vec![Vec::new(); r];
        for i in (0..r).rev() {
            let pc = self.pivots[i];
            let lead = Rational::from_integer(self.rows[i][pc].clone());
            let mut row: Vec<Rational> = self.rows[i]
                .iter()
                .map(|v| Rational::from_integer(v.clone()) / &lead)
                .collect();
            for (&pk, done) in self.pivots[i + 1..r].iter().zip(&out[i + 1..r]) {
                if row[pk].is_zero() {
                    continue;
                }
                let factor = row[pk].clone();
                for j in pk..self.cols {
                    if !done[j].is_zero() {
                        row[j] -= &factor * &done[j];
                    }
                }
            }
            out[i] = row;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::rat;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::identity(2).rank(), 2);
        assert_eq!(RationalMatrix::zeros(3, 3).rank(), 0);
        let m = RationalMatrix::from_i64(&[&[1, 2], &[2, 4], &[3, 6]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(RationalMatrix::zeros(0, 4).rank(), 0);
        assert_eq!(RationalMatrix::zeros(4, 0).rank(), 0);
    }

    #[test]
    fn nullspace_examples() {
        assert!(RationalMatrix::identity(2).nullspace_basis().is_empty());
        let m = RationalMatrix::from_i64(&[&[1, 1, 1]]).unwrap();
        assert_eq!(m.nullspace_basis(), vec![v(&[-1, 1, 0]), v(&[-1, 0, 1])]);
        let m = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(m.nullspace_basis(), vec![v(&[-2, 1])]);
    }

    #[test]
    fn subspace_dimension_examples() {
        assert_eq!(subspace_dimension(&[v(&[1, 0]), v(&[0, 1])]).unwrap(), 2);
        assert_eq!(subspace_dimension(&[]).unwrap(), 0);
        assert_eq!(subspace_dimension(&[v(&[1, 2, 3]), v(&[2, 4, 6])]).unwrap(), 1);
        assert!(subspace_dimension(&[v(&[1, 2]), v(&[1])]).is_err());
    }

    #[test]
    fn rref_of_rank_two() {
        let m = RationalMatrix::from_i64(&[&[2, 4, 6], &[1, 3, 5], &[3, 7, 11]]).unwrap();
        let (rows, piv) = m.rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(rows, vec![v(&[1, 0, -1]), v(&[0, 1, 2])]);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let m = RationalMatrix::from_i64(&[
            &[3, 1, 4, 1, 5],
            &[9, 2, 6, 5, 3],
            &[5, 8, 9, 7, 9],
            &[3, 2, 3, 8, 4],
        ])
        .unwrap();
        let a = IntegerEchelon::new(m.integer_rows(), 5, ExecMode::Sequential);
        let b = IntegerEchelon::new(m.integer_rows(), 5, ExecMode::Parallel);
        assert_eq!(a.rows, b.rows);
        assert_eq!(a.pivots, b.pivots);
    }
}
