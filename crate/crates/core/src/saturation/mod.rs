//! Saturation I_f of the Jacobian ideal, the module N(f) = I_f/J_f, the
//! defect ν(C), the initial degree σ(C) and the total Tjurina number τ(C).
//!
//! The sweep works with annihilators: Λ_k ⊂ S_k^* is the set of functionals
//! vanishing on (I_f)_k. Since (I_f)_k = {g : x·g, y·g, z·g ∈ (I_f)_{k+1}},
//! Λ_k is spanned by the functionals λ∘x, λ∘y, λ∘z for λ ∈ Λ_{k+1}, and
//! dim (S/I_f)_k = dim Λ_k.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::modular::{prime, ModMatrix};
use crate::linalg::rational::Rational;
use crate::linalg::IntegerEchelon;
use crate::par::ExecMode;
use crate::poly::monomial::count_or_zero;
use crate::poly::{monomial_count, monomials, HomogeneousPolynomial};
use crate::syzygy::{graded_resolution_with, GradedSliceBasis, Jacobian, SyzygyProfile};

const PRIME_ATTEMPTS: usize = 3;

/// The graded dimensions of N(f) with the derived invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectProfile {
    pub d: u32,
    pub nu: u64,
    /// None when N(f) = 0.
    pub sigma: Option<u32>,
    pub tau: u64,
    /// n(f)_k for 0 ≤ k ≤ 3d − 5.
    #[serde(rename = "n")]
    pub n_values: BTreeMap<u32, u64>,
}

impl DefectProfile {
    /// T = 3d − 6, the centre of symmetry of N(f) is T/2.
    pub fn t(&self) -> i64 {
        3 * i64::from(self.d) - 6
    }

    pub fn n(&self, k: u32) -> u64 {
        self.n_values.get(&k).copied().unwrap_or(0)
    }

    /// Σ_k n(f)_k, the total dimension of N(f).
    pub fn total(&self) -> u64 {
        self.n_values.values().sum()
    }

    /// Whether n(f)_k = n(f)_{T−k} for all k.
    pub fn is_self_dual(&self) -> bool {
        let t = self.t();
        self.n_values.iter().all(|(&k, &v)| {
            let mirror = t - i64::from(k);
            let w = if mirror < 0 { 0 } else { self.n(mirror as u32) };
            v == w
        })
    }
}

/// Coefficients of t^k in the Hilbert series of N(f) read off the
/// resolution: the numerator Σ t^{3(d−1)−e_j} − Σ t^{2(d−1)−d_i}
/// + Σ t^{d−1+d_i} − Σ t^{e_j}, divided by (1 − t)³.
pub fn predicted_n(profile: &SyzygyProfile, k: u32) -> i64 {
    let d = i64::from(profile.d);
    let k = i64::from(k);
    let term = |a: i64| count_or_zero(k - a) as i64;
    let mut total = 0i64;
    for &e in &profile.second_syzygy_degrees {
        let e = i64::from(e);
        total += term(3 * (d - 1) - e) - term(e);
    }
    for &di in &profile.generator_degrees {
        let di = i64::from(di);
        total += term(d - 1 + di) - term(2 * (d - 1) - di);
    }
    total
}

/// λ ↦ λ∘x_v as index maps: entry μ of the contraction is λ[μ·x_v].
fn contraction_indices(k: u32) -> [Vec<usize>; 3] {
    let ms = monomials(k);
    [0, 1, 2].map(|v| {
        ms.iter()
            .map(|m| {
                let mut e = m.0;
                e[v] += 1;
                crate::poly::Monomial(e).index()
            })
            .collect()
    })
}

fn base_degree(d: u32) -> u32 {
    (3 * d).saturating_sub(5).max(1)
}

enum Sweep {
    Done(Vec<u64>),
    Unstable,
}

/// dim (S/I_f)_k for k ≤ `base`, modulo p, starting from Λ_{base+1}.
fn sweep_mod(jac: &Jacobian, profile: &SyzygyProfile, base: u32, p: u64, mode: ExecMode) -> Result<Sweep> {
    let top = base + 1;
    let ech = jac.ideal_rows_mod(top, p).echelon_with(mode);
    let ambient = monomial_count(top);
    if (ambient - ech.rank()) as u64 != profile.milnor_hilbert(top) {
        return Ok(Sweep::Unstable);
    }
    let mut lambda = ech.kernel_basis_with(mode);
    let mut h = vec![0u64; base as usize + 1];
    for k in (0..=base).rev() {
        let idx = contraction_indices(k);
        let n = monomial_count(k);
        let mut rows = Vec::with_capacity(3 * lambda.len());
        for l in &lambda {
            for map in &idx {
                rows.push(map.iter().map(|&i| l[i]).collect::<Vec<u32>>());
            }
        }
        let ech = ModMatrix::from_rows(p, n, &rows).echelon_with(mode);
        h[k as usize] = ech.rank() as u64;
        lambda = ech.rows;
    }
    if h[base as usize] != profile.milnor_hilbert(base) {
        return Ok(Sweep::Unstable);
    }
    Ok(Sweep::Done(h))
}

/// n(f)_k from a certified resolution, cross-checked against the sweep.
pub fn n_profile_from(f: &HomogeneousPolynomial, profile: &SyzygyProfile, mode: ExecMode) -> Result<DefectProfile> {
    let jac = Jacobian::new(f)?;
    let d = jac.degree();
    let k_max = base_degree(d);
    let mut last = String::from("saturation not stable at the base degree");
    for attempt in 0..PRIME_ATTEMPTS {
        let p = prime(attempt + 7);
        let mut h = None;
        for base in [k_max, k_max + 3] {
            if let Sweep::Done(v) = sweep_mod(&jac, profile, base, p, mode)? {
                h = Some(v);
                break;
            }
        }
        let Some(h) = h else { continue };
        let mut n_values = BTreeMap::new();
        let mut consistent = true;
        for k in 0..=k_max {
            let n = profile.milnor_hilbert(k) - h[k as usize];
            if n as i64 != predicted_n(profile, k) {
                consistent = false;
                last = format!("n_{k} = {n} disagrees with the resolution");
                break;
            }
            n_values.insert(k, n);
        }
        if !consistent {
            continue;
        }
        let tau = h[k_max as usize];
        if d >= 3 && (h[k_max as usize - 1] != tau || h[k_max as usize - 2] != tau) {
            return Err(Error::Diagnostic("dim (S/I)_k not stable near 3d − 5".into()));
        }
        if tau != profile.tau() {
            return Err(Error::Diagnostic(format!(
                "saturation gives τ = {tau}, the resolution {}",
                profile.tau()
            )));
        }
        let nu = n_values.values().copied().max().unwrap_or(0);
        let sigma = n_values.iter().find(|(_, &v)| v > 0).map(|(&k, _)| k);
        return Ok(DefectProfile {
            d,
            n_values,
            nu,
            sigma,
            tau,
        });
    }
    Err(Error::Diagnostic(last))
}

/// The defect profile of a reduced curve.
pub fn n_profile(f: &HomogeneousPolynomial) -> Result<DefectProfile> {
    n_profile_with(f, ExecMode::default())
}

pub fn n_profile_with(f: &HomogeneousPolynomial, mode: ExecMode) -> Result<DefectProfile> {
    let profile = graded_resolution_with(f, mode)?;
    n_profile_from(f, &profile, mode)
}

/// τ(C), the stable value of dim (S/I_f)_k.
pub fn total_tjurina(f: &HomogeneousPolynomial) -> Result<u64> {
    Ok(n_profile(f)?.tau)
}

/// ν from the closed-form defect theorem, both cases evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DefectCases {
    /// The selected value: case a) when r < (d−2)/2, case b) otherwise.
    pub nu: i64,
    /// (d−1)² − r(d−r−1) − τ, when r < d/2.
    pub case_a: Option<i64>,
    /// ⌈3(d−1)²/4⌉ − τ, when r ≥ (d−2)/2.
    pub case_b: Option<i64>,
}

impl DefectCases {
    /// Whether both cases apply and give different values.
    pub fn overlap_disagrees(&self) -> bool {
        matches!((self.case_a, self.case_b), (Some(a), Some(b)) if a != b)
    }
}

pub fn defect_cases(d: u32, r: u32, tau: u64) -> DefectCases {
    let (d, r, tau) = (i64::from(d), i64::from(r), tau as i64);
    let a = (d - 1) * (d - 1) - r * (d - r - 1) - tau;
    let b = (3 * (d - 1) * (d - 1) + 3) / 4 - tau;
    let case_a = (2 * r < d).then_some(a);
    let case_b = (2 * r >= d - 2).then_some(b);
    DefectCases {
        nu: if 2 * r < d - 2 { a } else { b },
        case_a,
        case_b,
    }
}

/// ν(C) from d, r = mdr(f) and τ(C).
pub fn defect_via_dimca(d: u32, r: u32, tau: u64) -> i64 {
    defect_cases(d, r, tau).nu
}

/// The exact saturation in degree k as a reduced row basis.
///
/// Starts from the exact annihilator of (J_f)_{K₀} where K₀ is one past
/// the last nonzero n(f)_k, so that (I_f)_{K₀} = (J_f)_{K₀}.
pub fn saturation_slice(f: &HomogeneousPolynomial, k: u32) -> Result<GradedSliceBasis> {
    let profile = n_profile(f)?;
    let jac = Jacobian::new(f)?;
    let last_nonzero = profile
        .n_values
        .iter()
        .filter(|(_, &v)| v > 0)
        .map(|(&j, _)| j)
        .next_back();
    let base = match last_nonzero {
        Some(j) => (j + 1).max(k),
        None => k,
    };
    let mode = ExecMode::default();
    let ambient = monomial_count(base);
    let rows = jac.ideal_rows(base);
    let mut lambda: Vec<Vec<Rational>> = if rows.is_empty() {
        identity(ambient)
    } else {
        IntegerEchelon::new(rows, ambient, mode).nullspace()
    };
    for j in (k..base).rev() {
        let idx = contraction_indices(j);
        let contracted: Vec<Vec<Rational>> = lambda
            .iter()
            .flat_map(|l| idx.iter().map(move |map| map.iter().map(|&i| l[i].clone()).collect()))
            .collect();
        lambda = if contracted.is_empty() {
            Vec::new()
        } else {
            IntegerEchelon::new(integer_rows(&contracted), monomial_count(j), mode).reduced_rows()
        };
    }
    let n = monomial_count(k);
    let basis = if lambda.is_empty() {
        identity(n)
    } else {
        IntegerEchelon::new(integer_rows(&lambda), n, mode).nullspace()
    };
    let basis = if basis.is_empty() {
        basis
    } else {
        IntegerEchelon::new(integer_rows(&basis), n, mode).reduced_rows()
    };
    Ok(GradedSliceBasis {
        degree: k,
        ambient: n,
        basis,
    })
}

fn identity(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            let mut v = vec![Rational::from_integer(0.into()); n];
            v[i] = Rational::from_integer(1.into());
            v
        })
        .collect()
}

fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| crate::linalg::rational::clear_denominators(r))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial as p;

    #[test]
    fn dimca_cases() {
        // NF_n with n ≥ 4 and NF_3
        for n in 4..=8u32 {
            let n64 = u64::from(n);
            assert_eq!(defect_via_dimca(3 * n - 1, n + 1, 7 * n64 * n64 - 11 * n64 + 6), 1);
        }
        assert_eq!(defect_via_dimca(8, 4, 36), 1);
        for k in 2..=6u32 {
            let tau = 2 * u64::from((2 * k - 1) * (k - 1));
            assert_eq!(defect_via_dimca(2 * k, 1, tau), 1);
        }
        let c = defect_cases(8, 4, 36);
        assert_eq!(c.case_a, None);
        assert_eq!(c.case_b, Some(1));
    }

    #[test]
    fn small_profiles() {
        let xyz = n_profile(&p("x*y*z").unwrap()).unwrap();
        assert_eq!((xyz.nu, xyz.tau, xyz.sigma), (0, 3, None));
        let conic = n_profile(&p("x*z - y^2").unwrap()).unwrap();
        assert_eq!(conic.n_values, BTreeMap::from([(0, 1), (1, 0)]));
        assert_eq!((conic.nu, conic.tau), (1, 0));
        let cubic = n_profile(&p("x^3 + y^3 + z^3").unwrap()).unwrap();
        assert_eq!((cubic.tau, cubic.total(), cubic.nu), (0, 8, 3));
        assert!(cubic.is_self_dual());
    }

    #[test]
    fn slice_of_smooth_conic() {
        let s = saturation_slice(&p("x*z - y^2").unwrap(), 0).unwrap();
        assert_eq!(s.dimension(), 1);
        let s = saturation_slice(&p("x*z - y^2").unwrap(), 1).unwrap();
        assert_eq!(s.dimension(), 3);
    }
}
