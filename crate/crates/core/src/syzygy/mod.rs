//! The Jacobian ideal, its syzygies and the graded resolution of the
//! Milnor algebra M(f) = S/J_f.

pub mod jacobian;
pub mod profile;
pub mod resolution;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::rational::Rational;
use crate::linalg::IntegerEchelon;
use crate::par::ExecMode;
use crate::poly::monomial::count_or_zero;
use crate::poly::{is_reduced_probabilistic, monomial_count, HomogeneousPolynomial};

pub use jacobian::Jacobian;
pub use profile::{Relation, Syzygy, SyzygyData};
pub use resolution::Resolution;

/// Seed and trial count of the reducedness check run before analyses.
pub const REDUCED_SEED: u64 = 0x5eed;
pub const REDUCED_TRIALS: usize = 4;

/// A basis of one graded piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSliceBasis {
    pub degree: u32,
    pub ambient: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl GradedSliceBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Degrees of a minimal free resolution of M(f).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyProfile {
    pub d: u32,
    pub mdr: u32,
    /// Exponents d₁ ≤ … ≤ d_m.
    pub generator_degrees: Vec<u32>,
    /// e₁ ≤ … ≤ e_{m−2}, graded as in the resolution of M(f).
    pub second_syzygy_degrees: Vec<u32>,
    /// dim Syz_r for the scanned degrees.
    pub dims: BTreeMap<u32, u64>,
}

impl SyzygyProfile {
    pub fn from_data(data: &SyzygyData) -> Self {
        let mut gens: Vec<u32> = data.generators.iter().map(|g| g.degree).collect();
        gens.sort_unstable();
        let mut seconds: Vec<u32> = data
            .relations
            .iter()
            .map(|r| r.degree + data.d - 1)
            .collect();
        seconds.sort_unstable();
        SyzygyProfile {
            d: data.d,
            mdr: gens[0],
            generator_degrees: gens,
            second_syzygy_degrees: seconds,
            dims: data.dims.clone(),
        }
    }

    /// Number of minimal generators m.
    pub fn m(&self) -> usize {
        self.generator_degrees.len()
    }

    /// dim Syz_r read off the resolution.
    pub fn syzygy_dimension(&self, r: u32) -> u64 {
        let r = i64::from(r);
        let d = i64::from(self.d);
        let plus: u64 = self
            .generator_degrees
            .iter()
            .map(|&di| count_or_zero(r - i64::from(di)))
            .sum();
        let minus: u64 = self
            .second_syzygy_degrees
            .iter()
            .map(|&e| count_or_zero(r - (i64::from(e) - d + 1)))
            .sum();
        plus - minus
    }

    /// dim M(f)_k = C(k+2,2) − 3·C(k−d+3,2) + dim Syz_{k−d+1}.
    pub fn milnor_hilbert(&self, k: u32) -> u64 {
        let k64 = i64::from(k);
        let d = i64::from(self.d);
        let syz = if k + 1 >= self.d {
            self.syzygy_dimension(k + 1 - self.d)
        } else {
            0
        };
        count_or_zero(k64) + syz - 3 * count_or_zero(k64 - d + 1)
    }

    /// The stable value of the Hilbert function of M(f), which is τ(C).
    pub fn tau(&self) -> u64 {
        self.milnor_hilbert(3 * self.d + 3)
    }

    /// ε_j in e_j = d + d_{j+2} − 1 + ε_j.
    pub fn epsilons(&self) -> Vec<i64> {
        self.second_syzygy_degrees
            .iter()
            .enumerate()
            .map(|(j, &e)| {
                i64::from(e) - i64::from(self.d) - i64::from(self.generator_degrees[j + 2]) + 1
            })
            .collect()
    }

    pub fn resolution(&self) -> Resolution {
        Resolution::from_profile(self)
    }
}

fn checked_reduced(f: &HomogeneousPolynomial) -> Result<()> {
    if !is_reduced_probabilistic(f, REDUCED_TRIALS, REDUCED_SEED)? {
        return Err(Error::NotReduced);
    }
    Ok(())
}

/// Minimal generators and relations, with the reducedness check.
pub fn syzygy_data(f: &HomogeneousPolynomial, mode: ExecMode) -> Result<SyzygyData> {
    checked_reduced(f)?;
    profile::compute(&Jacobian::new(f)?, mode)
}

/// Minimal generator and second syzygy degrees of a reduced curve.
pub fn graded_resolution(f: &HomogeneousPolynomial) -> Result<SyzygyProfile> {
    graded_resolution_with(f, ExecMode::default())
}

pub fn graded_resolution_with(f: &HomogeneousPolynomial, mode: ExecMode) -> Result<SyzygyProfile> {
    checked_reduced(f)?;
    graded_resolution_unchecked(f, mode)
}

/// As [`graded_resolution_with`] without the reducedness check; on a
/// non-reduced input the consistency checks usually fail with a diagnostic.
pub fn graded_resolution_unchecked(f: &HomogeneousPolynomial, mode: ExecMode) -> Result<SyzygyProfile> {
    let profile = SyzygyProfile::from_data(&profile::compute(&Jacobian::new(f)?, mode)?);
    check_profile(&profile)?;
    Ok(profile)
}

/// The exponents d₁ ≤ … ≤ d_m.
pub fn minimal_generator_degrees(f: &HomogeneousPolynomial) -> Result<Vec<u32>> {
    Ok(graded_resolution(f)?.generator_degrees)
}

/// Smallest degree of a nonzero syzygy, scanning degrees upwards.
pub fn mdr(f: &HomogeneousPolynomial) -> Result<u32> {
    mdr_with(f, ExecMode::default())
}

pub fn mdr_with(f: &HomogeneousPolynomial, mode: ExecMode) -> Result<u32> {
    let jac = Jacobian::new(f)?;
    for r in 0..f.degree() {
        if profile::first_syzygy(&jac, r, mode)?.is_some() {
            return Ok(r);
        }
    }
    // the Koszul syzygies live in degree d − 1
    Ok(f.degree() - 1)
}

/// Sanity conditions every resolution of a reduced curve satisfies.
fn check_profile(p: &SyzygyProfile) -> Result<()> {
    let m = p.m();
    if m < 2 || p.second_syzygy_degrees.len() != m - 2 {
        return Err(Error::Diagnostic(format!(
            "{m} generators with {} relations",
            p.second_syzygy_degrees.len()
        )));
    }
    let k = 3 * p.d + 3;
    if p.milnor_hilbert(k) != p.milnor_hilbert(k + 1) || p.milnor_hilbert(k) != p.milnor_hilbert(k + 2) {
        return Err(Error::Diagnostic("Hilbert function of M(f) not eventually constant".into()));
    }
    for (&r, &dim) in &p.dims {
        if p.syzygy_dimension(r) != dim {
            return Err(Error::Diagnostic(format!("resolution disagrees with dim Syz_{r}")));
        }
    }
    Ok(())
}

/// dim M(f)_k, computed from the resolution.
pub fn milnor_hilbert(f: &HomogeneousPolynomial, k: u32) -> Result<u64> {
    Ok(graded_resolution(f)?.milnor_hilbert(k))
}

/// Reduced row basis of (J_f)_k.
pub fn jacobian_slice(f: &HomogeneousPolynomial, k: u32) -> Result<GradedSliceBasis> {
    let jac = Jacobian::new(f)?;
    let cols = monomial_count(k);
    let rows = jac.ideal_rows(k);
    let basis = if rows.is_empty() {
        Vec::new()
    } else {
        IntegerEchelon::new(rows, cols, ExecMode::default()).reduced_rows()
    };
    Ok(GradedSliceBasis {
        degree: k,
        ambient: cols,
        basis,
    })
}

/// Exact basis of Syz_r as flat (a | b | c) coefficient vectors.
pub fn syzygy_slice(f: &HomogeneousPolynomial, r: u32) -> Result<GradedSliceBasis> {
    let jac = Jacobian::new(f)?;
    let basis = profile::exact_kernel(&jac, r, ExecMode::default())?
        .into_iter()
        .map(|v| v.into_iter().map(Rational::from_integer).collect())
        .collect();
    Ok(GradedSliceBasis {
        degree: r,
        ambient: 3 * monomial_count(r),
        basis,
    })
}

/// The triple (a, b, c) as a flat coefficient vector in degree r.
pub fn syzygy_vector(parts: &[HomogeneousPolynomial; 3], r: u32) -> Result<Vec<Rational>> {
    let mut out = Vec::with_capacity(3 * monomial_count(r));
    for p in parts {
        if p.is_zero() {
            out.extend(std::iter::repeat_n(Rational::zero(), monomial_count(r)));
        } else {
            out.extend(p.coefficient_vector(r)?);
        }
    }
    Ok(out)
}

/// Whether a·f_x + b·f_y + c·f_z = 0 holds exactly.
pub fn is_syzygy(f: &HomogeneousPolynomial, parts: &[HomogeneousPolynomial; 3]) -> Result<bool> {
    let partials = f.partials()?;
    let mut total: Option<HomogeneousPolynomial> = None;
    for (a, fa) in parts.iter().zip(&partials) {
        let t = a.mul(fa);
        total = Some(match total {
            None => t,
            Some(s) if t.is_zero() => s,
            Some(s) if s.is_zero() => t,
            Some(s) => s.add(&t)?,
        });
    }
    Ok(total.is_none_or(|t| t.is_zero()))
}

/// Integer vector to rationals, for comparisons with slice bases.
pub fn to_rational(v: &[BigInt]) -> Vec<Rational> {
    v.iter().cloned().map(Rational::from_integer).collect()
}
