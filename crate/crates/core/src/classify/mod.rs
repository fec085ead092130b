//! The taxonomy of curves by their syzygies, splitting types and the
//! criterion for unexpected curves.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arrangements::PointSet;
use crate::error::{Error, Result};
use crate::par::{self, ExecMode};
use crate::poly::HomogeneousPolynomial;
use crate::saturation::{n_profile_from, DefectProfile};
use crate::syzygy::{graded_resolution_unchecked, graded_resolution_with, mdr_with, SyzygyProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum CurveClass {
    Free,
    NearlyFree,
    PlusOneGenerated,
    ThreeSyzygy,
    MSyzygy(usize),
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveClass::Free => f.write_str("free"),
            CurveClass::NearlyFree => f.write_str("nearly_free"),
            CurveClass::PlusOneGenerated => f.write_str("plus_one_generated"),
            CurveClass::ThreeSyzygy => f.write_str("three_syzygy"),
            CurveClass::MSyzygy(m) => write!(f, "m_syzygy({m})"),
        }
    }
}

impl FromStr for CurveClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "free" => CurveClass::Free,
            "nearly_free" => CurveClass::NearlyFree,
            "plus_one_generated" => CurveClass::PlusOneGenerated,
            "three_syzygy" => CurveClass::ThreeSyzygy,
            _ => s
                .strip_prefix("m_syzygy(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|m| m.parse().ok())
                .map(CurveClass::MSyzygy)
                .ok_or_else(|| Error::Parse(format!("unknown class {s}")))?,
        })
    }
}

impl From<CurveClass> for String {
    fn from(c: CurveClass) -> String {
        c.to_string()
    }
}

impl TryFrom<String> for CurveClass {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub d: u32,
    pub class: CurveClass,
    pub exponents: Vec<u32>,
    pub generators: usize,
    pub almost_free: bool,
    pub nu: u64,
    pub tau: u64,
    /// The generic splitting type, when the ν identity has integer roots.
    pub splitting: Option<(u32, u32)>,
    /// d₃ for plus-one generated curves.
    pub level: Option<u32>,
}

pub fn curve_class(d: u32, exponents: &[u32]) -> CurveClass {
    match exponents {
        [_, _] => CurveClass::Free,
        [d1, d2, d3] if d1 + d2 == d && d2 == d3 => CurveClass::NearlyFree,
        [d1, d2, _] if d1 + d2 == d => CurveClass::PlusOneGenerated,
        [_, _, _] => CurveClass::ThreeSyzygy,
        e => CurveClass::MSyzygy(e.len()),
    }
}

/// Combines a resolution and a defect profile.
pub fn classify_from(profile: &SyzygyProfile, defect: &DefectProfile) -> ClassificationRecord {
    let d = profile.d;
    let exponents = profile.generator_degrees.clone();
    let class = curve_class(d, &exponents);
    let level = (class == CurveClass::PlusOneGenerated).then(|| exponents[2]);
    let almost_free = defect.total() == if d.is_multiple_of(2) { 1 } else { 2 };
    ClassificationRecord {
        d,
        class,
        generators: exponents.len(),
        exponents,
        almost_free,
        nu: defect.nu,
        tau: defect.tau,
        splitting: splitting_type(d, defect.tau, defect.nu).ok(),
        level,
    }
}

pub fn classify(f: &HomogeneousPolynomial) -> Result<ClassificationRecord> {
    classify_with(f, ExecMode::default())
}

pub fn classify_with(f: &HomogeneousPolynomial, mode: ExecMode) -> Result<ClassificationRecord> {
    Ok(analyze(f, mode)?.0)
}

/// Classification together with the profiles it was computed from.
pub fn analyze(f: &HomogeneousPolynomial, mode: ExecMode) -> Result<(ClassificationRecord, SyzygyProfile, DefectProfile)> {
    let profile = graded_resolution_with(f, mode)?;
    analyze_from(f, profile, mode)
}

/// As [`analyze`] without the reducedness check.
pub fn analyze_unchecked(
    f: &HomogeneousPolynomial,
    mode: ExecMode,
) -> Result<(ClassificationRecord, SyzygyProfile, DefectProfile)> {
    analyze_from(f, graded_resolution_unchecked(f, mode)?, mode)
}

fn analyze_from(
    f: &HomogeneousPolynomial,
    profile: SyzygyProfile,
    mode: ExecMode,
) -> Result<(ClassificationRecord, SyzygyProfile, DefectProfile)> {
    let defect = n_profile_from(f, &profile, mode)?;
    Ok((classify_from(&profile, &defect), profile, defect))
}

/// The pair a ≤ b with a + b = d − 1 and a·b = (d−1)² − τ − ν.
pub fn splitting_type(d: u32, tau: u64, nu: u64) -> Result<(u32, u32)> {
    let s = i64::from(d) - 1;
    let prod = s * s - tau as i64 - nu as i64;
    let disc = s * s - 4 * prod;
    let bad = || Error::Inconsistent(format!("no integer splitting for d = {d}, τ = {tau}, ν = {nu}"));
    if s < 0 || prod < 0 || disc < 0 {
        return Err(bad());
    }
    let root = disc.isqrt();
    if root * root != disc || (s - root) % 2 != 0 {
        return Err(bad());
    }
    Ok((((s - root) / 2) as u32, ((s + root) / 2) as u32))
}

/// A nearly free dual arrangement with exponents (d₁, d₂) admits an
/// unexpected curve exactly when d₂ − d₁ ≥ 3.
pub fn nearly_free_unexpected(d1: u32, d2: u32) -> bool {
    d2 >= d1 + 3
}

/// The n-profile predicted for a plus-one generated curve, mirrored onto
/// the upper half by n_j = n_{T−j}.
pub fn cor10_profile(d: u32, d1: u32, d2: u32, d3: u32) -> Result<BTreeMap<u32, u64>> {
    let _ = d1;
    if d2 == d3 {
        return Err(Error::InvalidParameter("nearly free input (d₂ = d₃)".into()));
    }
    if d3 < d2 {
        return Err(Error::InvalidParameter("exponents must be sorted".into()));
    }
    let (d, d2, d3) = (i64::from(d), i64::from(d2), i64::from(d3));
    let k2 = 2 * d - d2 - 3;
    let k3 = 2 * d - d3 - 3;
    let t = 3 * d - 6;
    let nu = d3 - d2 + 1;
    let lower = |j: i64| -> i64 {
        if j < k3 {
            0
        } else if j <= k2 {
            j - k3 + 1
        } else {
            nu
        }
    };
    Ok((0..=3 * d - 5)
        .map(|j| {
            let v = if 2 * j <= t { lower(j) } else { lower(t - j) };
            (j as u32, v.max(0) as u64)
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Criterion,
    Interpolation,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Criterion => "criterion",
            Method::Interpolation => "interpolation",
        })
    }
}

/// Whether Z admits unexpected curves of type U(2, j, j − 1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnexpectedVerdict {
    pub admits: bool,
    pub method: Method,
    /// |Z|.
    pub points: usize,
    pub a_z: Option<u32>,
    /// m(A_Z).
    pub max_multiplicity: Option<u32>,
    /// The degrees j with a_Z < j ≤ |Z| − a_Z − 2 when Z admits.
    pub degrees: Vec<u32>,
    pub irreducible_minimal: Option<bool>,
}

impl UnexpectedVerdict {
    /// (j_min, j_max] as in the criterion.
    pub fn j_range(&self) -> Option<(u32, u32)> {
        Some((self.degrees.first()? - 1, *self.degrees.last()?))
    }
}

/// a_Z of a point set: the first entry of the splitting type of the dual
/// curve.
pub fn a_z(z: &PointSet, mode: ExecMode) -> Result<(u32, ClassificationRecord)> {
    let record = classify_with(&z.dual_polynomial(), mode)?;
    let (a, _) = record.splitting.ok_or_else(|| {
        Error::Inconsistent("dual arrangement has no integer splitting type".into())
    })?;
    Ok((a, record))
}

/// The criterion m(A_Z) ≤ a_Z + 1 < |Z|/2, with j ranging over
/// a_Z < j ≤ |Z| − a_Z − 2.
pub fn unexpected_by_criterion(z: &PointSet) -> Result<UnexpectedVerdict> {
    unexpected_by_criterion_with(z, ExecMode::default())
}

pub fn unexpected_by_criterion_with(z: &PointSet, mode: ExecMode) -> Result<UnexpectedVerdict> {
    if z.len() < 2 {
        return Err(Error::InvalidParameter("need at least two points".into()));
    }
    let (a, _) = a_z(z, mode)?;
    Ok(criterion_verdict(z.len(), a, z.dual_table()?.max_multiplicity()))
}

pub fn criterion_verdict(points: usize, a_z: u32, max_multiplicity: u32) -> UnexpectedVerdict {
    let admits = max_multiplicity <= a_z + 1 && 2 * (a_z as usize + 1) < points;
    let degrees = if admits {
        (a_z + 1..=(points as u32 - a_z - 2)).collect()
    } else {
        Vec::new()
    };
    UnexpectedVerdict {
        admits,
        method: Method::Criterion,
        points,
        a_z: Some(a_z),
        max_multiplicity: Some(max_multiplicity),
        degrees,
        irreducible_minimal: None,
    }
}

/// mdr of the dual curve of every single-point deletion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionReport {
    pub a_z: u32,
    pub deletions: Vec<u32>,
    pub irreducible: bool,
}

/// The unexpected curve of minimal degree a_Z + 1 is irreducible exactly
/// when every deletion keeps a_{Z_i} = a_Z; a_{Z_i} is read as mdr.
pub fn minimal_unexpected_irreducible(z: &PointSet) -> Result<DeletionReport> {
    minimal_unexpected_irreducible_with(z, ExecMode::default())
}

pub fn minimal_unexpected_irreducible_with(z: &PointSet, mode: ExecMode) -> Result<DeletionReport> {
    if !z.is_rational() {
        return Err(Error::InvalidParameter("deletions need rational points".into()));
    }
    let a = mdr_with(&z.dual_polynomial(), mode)?;
    let idx: Vec<usize> = (0..z.points().len()).collect();
    let deletions = par::map(mode, &idx, |&i| {
        mdr_with(&z.without(i).dual_polynomial(), ExecMode::Sequential)
    })
    .into_iter()
    .collect::<Result<Vec<u32>>>()?;
    let irreducible = deletions.iter().all(|&v| v == a);
    Ok(DeletionReport {
        a_z: a,
        deletions,
        irreducible,
    })
}
