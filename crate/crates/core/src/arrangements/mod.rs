//! Line arrangements, point sets and their duality, and the combinatorics
//! of arrangement singularities.

pub mod named;
pub mod orbit;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::rational::Rational;
use crate::poly::point::cross;
use crate::poly::{HomogeneousPolynomial, Monomial, PolynomialMap, ProjectivePoint};

pub use named::{
    conic_family, fermat, fermat_deleted, fermat_deleted_dual, fermat_deleted_twice,
    fermat_deleted_twice_dual, fermat_dual, generate, maclane_conic_factors, named, Named,
    SymbolicArrangement,
};
pub use orbit::PointOrbit;

/// A finite set of pairwise non-proportional lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineArrangement {
    lines: Vec<HomogeneousPolynomial>,
}

impl LineArrangement {
    pub fn new(lines: Vec<HomogeneousPolynomial>) -> Result<Self> {
        for l in &lines {
            if l.degree() != 1 {
                return Err(Error::DegreeMismatch {
                    expected: 1,
                    found: l.degree(),
                });
            }
            if l.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        for (i, a) in lines.iter().enumerate() {
            for b in &lines[..i] {
                if a.equal_up_to_scalar(b) {
                    return Err(Error::InvalidParameter(format!("repeated line {a}")));
                }
            }
        }
        Ok(LineArrangement { lines })
    }

    pub fn from_coefficients(rows: &[[i64; 3]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| HomogeneousPolynomial::linear_i64(r[0], r[1], r[2]))
                .collect(),
        )
    }

    pub fn lines(&self) -> &[HomogeneousPolynomial] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Coefficients (a, b, c) of the i-th line a·x + b·y + c·z.
    pub fn coefficients(&self, i: usize) -> [Rational; 3] {
        line_coefficients(&self.lines[i])
    }

    /// The defining polynomial: the product of all lines.
    pub fn polynomial(&self) -> HomogeneousPolynomial {
        HomogeneousPolynomial::product(&self.lines)
    }

    /// The arrangement with the i-th line removed.
    pub fn without(&self, i: usize) -> LineArrangement {
        let mut lines = self.lines.clone();
        lines.remove(i);
        LineArrangement { lines }
    }
}

fn line_coefficients(l: &HomogeneousPolynomial) -> [Rational; 3] {
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|e| l.coefficient(&Monomial(e)))
}

/// A finite set of points: rational points plus Galois orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<ProjectivePoint>,
    orbits: Vec<PointOrbit>,
    table: Option<MultiplicityTable>,
}

impl PointSet {
    pub fn new(points: Vec<ProjectivePoint>) -> Result<Self> {
        Self::with_orbits(points, Vec::new())
    }

    pub fn from_i64(points: &[[i64; 3]]) -> Result<Self> {
        Self::new(
            points
                .iter()
                .map(|p| ProjectivePoint::from_i64(p[0], p[1], p[2]))
                .collect::<Result<_>>()?,
        )
    }

    pub fn with_orbits(points: Vec<ProjectivePoint>, orbits: Vec<PointOrbit>) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(Error::InvalidParameter(format!("repeated point {p}")));
            }
            if orbits.iter().any(|o| o.contains(p.coords())) {
                return Err(Error::InvalidParameter(format!("point {p} lies in an orbit")));
            }
        }
        for (i, o) in orbits.iter().enumerate() {
            if orbits[..i].iter().any(|q| q.meets(o)) {
                return Err(Error::InvalidParameter("orbits share a point".into()));
            }
        }
        Ok(PointSet {
            points,
            orbits,
            table: None,
        })
    }

    /// Attaches the multiplicity table of the dual arrangement, for sets
    /// whose dual lines are not rational.
    pub fn with_dual_table(mut self, table: MultiplicityTable) -> Self {
        self.table = Some(table);
        self
    }

    /// The table given by [`PointSet::with_dual_table`], if any.
    pub fn attached_table(&self) -> Option<&MultiplicityTable> {
        self.table.as_ref()
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn orbits(&self) -> &[PointOrbit] {
        &self.orbits
    }

    /// Number of points over the algebraic closure.
    pub fn len(&self) -> usize {
        self.points.len() + self.orbits.iter().map(PointOrbit::degree).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_rational(&self) -> bool {
        self.orbits.is_empty()
    }

    /// The set with the i-th rational point removed.
    pub fn without(&self, i: usize) -> PointSet {
        let mut out = self.clone();
        out.points.remove(i);
        out.table = None;
        out
    }

    /// Product of the dual lines of all points, orbits included.
    pub fn dual_polynomial(&self) -> HomogeneousPolynomial {
        let mut f = HomogeneousPolynomial::one();
        for p in &self.points {
            let [a, b, c] = p.coords().clone();
            f = f.mul(&HomogeneousPolynomial::linear(a, b, c));
        }
        for o in &self.orbits {
            f = f.mul(&o.dual_factor());
        }
        f
    }

    /// The multiplicity table of the dual arrangement: computed for
    /// rational sets, attached by the constructor otherwise.
    pub fn dual_table(&self) -> Result<MultiplicityTable> {
        if let Some(t) = &self.table {
            return Ok(t.clone());
        }
        line_combinatorics(&dual_arrangement(self)?)
    }
}

/// The line a·x + b·y + c·z = 0 for each point (a : b : c), in order.
pub fn dual_arrangement(z: &PointSet) -> Result<LineArrangement> {
    if !z.is_rational() {
        return Err(Error::InvalidParameter(
            "dual lines of an orbit are not rational".into(),
        ));
    }
    Ok(LineArrangement {
        lines: z
            .points
            .iter()
            .map(|p| {
                let [a, b, c] = p.coords().clone();
                HomogeneousPolynomial::linear(a, b, c)
            })
            .collect(),
    })
}

/// The points dual to the lines of an arrangement.
pub fn dual_points(a: &LineArrangement) -> PointSet {
    PointSet {
        points: (0..a.len())
            .map(|i| ProjectivePoint::new(a.coefficients(i)).expect("nonzero line"))
            .collect(),
        orbits: Vec::new(),
        table: None,
    }
}

/// Counts t_k of intersection points of multiplicity k ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiplicityTable {
    pub t: BTreeMap<u32, u64>,
    /// Empty when the table is known only symbolically.
    pub singular_points: Vec<(ProjectivePoint, u32)>,
}

impl MultiplicityTable {
    /// A table from (multiplicity, count) pairs; repeated multiplicities add up.
    pub fn from_counts(counts: &[(u32, u64)]) -> Self {
        let mut t = BTreeMap::new();
        for &(k, c) in counts {
            if c > 0 {
                *t.entry(k).or_insert(0) += c;
            }
        }
        MultiplicityTable {
            t,
            singular_points: Vec::new(),
        }
    }

    pub fn count(&self, k: u32) -> u64 {
        self.t.get(&k).copied().unwrap_or(0)
    }

    /// m(A), the largest multiplicity; zero without intersection points.
    pub fn max_multiplicity(&self) -> u32 {
        self.t.keys().next_back().copied().unwrap_or(0)
    }

    /// Σ t_k·C(k,2), which equals C(d,2) for d lines.
    pub fn incidence_count(&self) -> u64 {
        self.t
            .iter()
            .map(|(&k, &c)| c * u64::from(k) * u64::from(k - 1) / 2)
            .sum()
    }

    /// Σ t_k, the number of singular points.
    pub fn point_count(&self) -> u64 {
        self.t.values().sum()
    }
}

/// Intersection points of all pairs of lines, merged projectively.
pub fn line_combinatorics(a: &LineArrangement) -> Result<MultiplicityTable> {
    if a.len() < 2 {
        return Err(Error::InvalidParameter("need at least two lines".into()));
    }
    let coeffs: Vec<[Rational; 3]> = (0..a.len()).map(|i| a.coefficients(i)).collect();
    let mut order: Vec<ProjectivePoint> = Vec::new();
    let mut incident: HashMap<ProjectivePoint, BTreeSet<usize>> = HashMap::new();
    for i in 0..coeffs.len() {
        for j in i + 1..coeffs.len() {
            let p = ProjectivePoint::new(cross(&coeffs[i], &coeffs[j]))?;
            let set = incident.entry(p.clone()).or_insert_with(|| {
                order.push(p);
                BTreeSet::new()
            });
            set.insert(i);
            set.insert(j);
        }
    }
    let mut table = MultiplicityTable::default();
    for p in order {
        let k = incident[&p].len() as u32;
        *table.t.entry(k).or_insert(0) += 1;
        let canonical = ProjectivePoint::new(p.canonical())?;
        table.singular_points.push((canonical, k));
    }
    Ok(table)
}

/// Σ_k t_k·(k−1)², the total Tjurina number of an arrangement whose
/// singularities are ordinary.
pub fn tjurina_ordinary(t: &MultiplicityTable) -> u64 {
    t.t.iter()
        .map(|(&k, &c)| c * u64::from(k - 1) * u64::from(k - 1))
        .sum()
}

/// Pullback under (x : y : z) ↦ (x^k : y^k : z^k).
pub fn kummer_pullback(f: &HomogeneousPolynomial, k: u32) -> Result<HomogeneousPolynomial> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    Ok(f.pullback(&PolynomialMap::kummer(k)))
}

/// Whether the point lies on the curve.
pub fn on_curve(f: &HomogeneousPolynomial, p: &ProjectivePoint) -> bool {
    f.evaluate(p.coords()).is_zero()
}
