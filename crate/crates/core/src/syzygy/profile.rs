//! Certified minimal generators of Syz(J_f) and of their relations.
//!
//! Degree by degree, a modular kernel dimension bounds dim Syz_r from above
//! and exact syzygies (multiples of earlier generators plus newly lifted
//! ones) bound it from below. The relations among the multiples of the
//! generators certify the rank of the part they span. When the bounds
//! meet, the counts are exact. An unlucky prime shows up as bounds that do
//! not meet and triggers a retry with another prime.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::jacobian::{shift, Jacobian};
use crate::error::{Error, Result};
use crate::linalg::lift::lift_kernel_vectors;
use crate::linalg::modular::{prime, reduce, IncrementalBasis, ModMatrix};
use crate::par::ExecMode;
use crate::poly::{monomial_count, monomials};

const PRIME_ATTEMPTS: usize = 4;

/// A syzygy (a, b, c) of degree `degree`, coefficients in graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syzygy {
    pub degree: u32,
    pub components: [Vec<BigInt>; 3],
}

impl Syzygy {
    /// The concatenated coefficient vector (a | b | c).
    pub fn flat(&self) -> Vec<BigInt> {
        self.components.concat()
    }
}

/// A relation Σ c_i·g_i = 0 among generators; `coefficients[i]` has degree
/// `degree − d_i` and is empty for generators of degree ≥ `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub degree: u32,
    pub coefficients: Vec<Vec<BigInt>>,
}

/// Exact minimal generators and relations with the certified dimensions.
#[derive(Debug, Clone)]
pub struct SyzygyData {
    pub d: u32,
    pub generators: Vec<Syzygy>,
    pub relations: Vec<Relation>,
    /// dim Syz_r for every scanned degree.
    pub dims: BTreeMap<u32, u64>,
    pub prime: u64,
}

enum Failure {
    Unlucky(String),
    Fatal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            // lifting failures mean the prime disagrees with the rationals
            Error::Diagnostic(s) => Failure::Unlucky(s),
            other => Failure::Fatal(other),
        }
    }
}

type Attempt<T> = std::result::Result<T, Failure>;

fn residues(v: &[BigInt], p: u64) -> Vec<u32> {
    v.iter().map(|c| reduce(c, p)).collect()
}

struct Gen {
    exact: Syzygy,
    modp: [Vec<u32>; 3],
}

struct Rel {
    exact: Relation,
    modp: Vec<Vec<u32>>,
}

/// Columns of the multiples matrix in degree r: (generator, monomial).
fn multiple_columns(gens: &[Gen], r: u32) -> Vec<(usize, usize)> {
    let mut cols = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.exact.degree < r {
            for j in 0..monomial_count(r - g.exact.degree) {
                cols.push((i, j));
            }
        }
    }
    cols
}

/// μ·g as a flat vector of length 3·C(r+2, 2).
fn multiple<T: Clone + Zero>(comps: &[Vec<T>; 3], deg: u32, r: u32, mu_idx: usize) -> Vec<T> {
    let mu = monomials(r - deg)[mu_idx];
    comps.iter().flat_map(|c| shift(c, deg, &mu)).collect()
}

/// Relation times monomial λ as a vector over the multiples columns.
fn relation_multiple<T: Clone + Zero>(
    coeffs: &[Vec<T>],
    rel_deg: u32,
    gen_degs: &[u32],
    lam: &crate::poly::Monomial,
    offsets: &[Option<usize>],
    ncols: usize,
) -> Vec<T> {
    let mut out = vec![T::zero(); ncols];
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_empty() {
            continue;
        }
        let off = offsets[i].expect("relation generator present");
        for (k, v) in shift(c, rel_deg - gen_degs[i], lam).into_iter().enumerate() {
            out[off + k] = v;
        }
    }
    out
}

fn attempt(jac: &Jacobian, p: u64, mode: ExecMode) -> Attempt<SyzygyData> {
    let d = jac.degree();
    let cap = 2 * d + 1;
    let mut gens: Vec<Gen> = Vec::new();
    let mut rels: Vec<Rel> = Vec::new();
    let mut dims = BTreeMap::new();
    let mut new_gens_prev = 0usize;
    for r in 0..=cap {
        let n_syz = 3 * monomial_count(r);

        // relations among multiples of the generators found so far
        let cols = multiple_columns(&gens, r);
        let gen_degs: Vec<u32> = gens.iter().map(|g| g.exact.degree).collect();
        let mut offsets = vec![None; gens.len()];
        for (c, &(i, j)) in cols.iter().enumerate() {
            if j == 0 {
                offsets[i] = Some(c);
            }
        }
        let mult_vecs: Vec<Vec<u32>> = cols
            .iter()
            .map(|&(i, j)| multiple(&gens[i].modp, gen_degs[i], r, j))
            .collect();
        let mut beta = 0;
        let mut new_rels = 0;
        if !cols.is_empty() {
            let mut m = ModMatrix::zeros(p, n_syz, cols.len());
            for (c, v) in mult_vecs.iter().enumerate() {
                for (row, &x) in v.iter().enumerate() {
                    if x != 0 {
                        m.set(row, c, x);
                    }
                }
            }
            let ech = m.echelon_with(mode);
            beta = ech.rank();
            let ker_dim = cols.len() - beta;
            let mut known = IncrementalBasis::new(p, cols.len());
            for rel in &rels {
                for lam in monomials(r - rel.exact.degree) {
                    let v = relation_multiple(&rel.modp, rel.exact.degree, &gen_degs, &lam, &offsets, cols.len());
                    if !known.insert(&v) {
                        return Err(Failure::Unlucky("relation multiples dependent".into()));
                    }
                }
            }
            if known.rank() > ker_dim {
                return Err(Failure::Unlucky("too many relations".into()));
            }
            if known.rank() < ker_dim {
                let exact_cols: Vec<Vec<BigInt>> = cols
                    .iter()
                    .map(|&(i, j)| multiple(&gens[i].exact.components, gen_degs[i], r, j))
                    .collect();
                let int_rows: Vec<Vec<BigInt>> = (0..n_syz)
                    .map(|row| exact_cols.iter().map(|c| c[row].clone()).collect())
                    .collect();
                for f in ech.free_columns() {
                    if known.contains(&ech.kernel_vector(f)) {
                        continue;
                    }
                    let v = lift_kernel_vectors(&int_rows, &ech, &[f])?.pop().expect("one vector");
                    if !known.insert(&residues(&v, p)) {
                        return Err(Failure::Unlucky("lifted relation degenerate".into()));
                    }
                    let coefficients: Vec<Vec<BigInt>> = (0..gens.len())
                        .map(|i| match offsets[i] {
                            Some(off) => v[off..off + monomial_count(r - gen_degs[i])].to_vec(),
                            None => Vec::new(),
                        })
                        .collect();
                    let modp = coefficients.iter().map(|c| residues(c, p)).collect();
                    rels.push(Rel {
                        exact: Relation {
                            degree: r,
                            coefficients,
                        },
                        modp,
                    });
                    new_rels += 1;
                    if known.rank() == ker_dim {
                        break;
                    }
                }
                if known.rank() < ker_dim {
                    return Err(Failure::Unlucky("relations incomplete".into()));
                }
            }
        }

        // new generators
        let a = jac.syzygy_matrix_mod(r, p);
        let ech = a.echelon_with(mode);
        let upper = n_syz - ech.rank();
        if upper < beta {
            return Err(Failure::Unlucky("syzygy bounds crossed".into()));
        }
        let mut new_gens = 0;
        if upper > beta {
            let mut span = IncrementalBasis::new(p, n_syz);
            for v in &mult_vecs {
                span.insert(v);
            }
            if span.rank() != beta {
                return Err(Failure::Unlucky("multiples rank mismatch".into()));
            }
            let int_rows = jac.syzygy_matrix(r);
            for f in ech.free_columns() {
                if span.contains(&ech.kernel_vector(f)) {
                    continue;
                }
                let v = lift_kernel_vectors(&int_rows, &ech, &[f])?.pop().expect("one vector");
                let red = residues(&v, p);
                if !span.insert(&red) {
                    return Err(Failure::Unlucky("lifted syzygy degenerate".into()));
                }
                let n = monomial_count(r);
                let components = [v[..n].to_vec(), v[n..2 * n].to_vec(), v[2 * n..].to_vec()];
                let modp = [red[..n].to_vec(), red[n..2 * n].to_vec(), red[2 * n..].to_vec()];
                gens.push(Gen {
                    exact: Syzygy {
                        degree: r,
                        components,
                    },
                    modp,
                });
                new_gens += 1;
                if span.rank() == upper {
                    break;
                }
            }
            if span.rank() < upper {
                return Err(Failure::Unlucky("generators incomplete".into()));
            }
        }
        dims.insert(r, upper as u64);

        let m = gens.len();
        if r >= d && m >= 2 && new_gens == 0 && new_gens_prev == 0 && new_rels == 0 && rels.len() == m - 2 {
            return Ok(SyzygyData {
                d,
                generators: gens.into_iter().map(|g| g.exact).collect(),
                relations: rels.into_iter().map(|r| r.exact).collect(),
                dims,
                prime: p,
            });
        }
        new_gens_prev = new_gens;
    }
    Err(Failure::Fatal(Error::Diagnostic(format!(
        "syzygy scan did not close by degree {cap}"
    ))))
}

/// Computes the minimal generators and relations, retrying primes on
/// inconsistency.
pub fn compute(jac: &Jacobian, mode: ExecMode) -> Result<SyzygyData> {
    let mut last = String::new();
    for i in 0..PRIME_ATTEMPTS {
        match attempt(jac, prime(i), mode) {
            Ok(data) => return Ok(data),
            Err(Failure::Fatal(e)) => return Err(e),
            Err(Failure::Unlucky(why)) => last = why,
        }
    }
    Err(Error::Diagnostic(format!(
        "no consistent prime after {PRIME_ATTEMPTS} attempts: {last}"
    )))
}

/// Exact basis of Syz_r: one lifted kernel vector per free column.
pub fn exact_kernel(jac: &Jacobian, r: u32, mode: ExecMode) -> Result<Vec<Vec<BigInt>>> {
    let mut last = None;
    for i in 0..PRIME_ATTEMPTS {
        let p = prime(i);
        let ech = jac.syzygy_matrix_mod(r, p).echelon_with(mode);
        let free = ech.free_columns();
        if free.is_empty() {
            return Ok(Vec::new());
        }
        match lift_kernel_vectors(&jac.syzygy_matrix(r), &ech, &free) {
            Ok(v) => return Ok(v),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// One exact syzygy of degree r, or `None` when Syz_r = 0.
///
/// Full rank modulo p already proves Syz_r = 0 over the rationals.
pub fn first_syzygy(jac: &Jacobian, r: u32, mode: ExecMode) -> Result<Option<Vec<BigInt>>> {
    let mut last = None;
    for i in 0..PRIME_ATTEMPTS {
        let p = prime(i);
        let ech = jac.syzygy_matrix_mod(r, p).echelon_with(mode);
        let Some(&f) = ech.free_columns().first() else {
            return Ok(None);
        };
        match lift_kernel_vectors(&jac.syzygy_matrix(r), &ech, &[f]) {
            Ok(mut v) => return Ok(v.pop()),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one attempt"))
}
