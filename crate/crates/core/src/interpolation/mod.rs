//! Curves of degree d through a point set Z with an m-fold generic point,
//! and detection of unexpected curves by direct interpolation.
//!
//! Generic dimensions are computed in coordinates where the sampled point
//! is (0:0:1). There the multiplicity condition only removes the monomials
//! of low degree in the first two variables, and the conditions of Z are
//! the sole linear equations left.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arrangements::orbit::{uni_mul, uni_rem, Uni};
use crate::arrangements::PointSet;
use crate::classify::{Method, UnexpectedVerdict};
use crate::error::{Error, Result};
use crate::linalg::rational::clear_denominators;
use crate::linalg::{IntegerEchelon, Rational, RationalMatrix};
use crate::par::{self, ExecMode};
use crate::poly::{monomial_count, monomials, HomogeneousPolynomial, Monomial, PolynomialMap, ProjectivePoint};

pub const DEFAULT_SEED: u64 = 2024;
/// Sampled generic points per round.
pub const SAMPLES: usize = 3;
/// Initial coordinate bound of the sampled points.
pub const INITIAL_BOUND: i64 = 1_000_000;
const ROUNDS: usize = 6;

/// Z together with a point P of multiplicity m, for curves of degree d.
#[derive(Debug, Clone)]
pub struct FatPointSystem {
    pub z: PointSet,
    pub point: ProjectivePoint,
    pub multiplicity: u32,
    pub degree: u32,
}

impl FatPointSystem {
    pub fn new(z: PointSet, point: ProjectivePoint, multiplicity: u32, degree: u32) -> Result<Self> {
        if in_set(&z, point.coords()) {
            return Err(Error::InvalidParameter("the fat point lies in Z".into()));
        }
        Ok(FatPointSystem {
            z,
            point,
            multiplicity,
            degree,
        })
    }
}

fn in_set(z: &PointSet, p: &[Rational; 3]) -> bool {
    z.points().iter().any(|q| ProjectivePoint::same_point(q.coords(), p))
        || z.orbits().iter().any(|o| o.contains(p))
}

/// Rows expressing vanishing on Z after the substitution x ↦ frame·x, in
/// the given monomial columns. An orbit of degree e contributes the e
/// coefficients of f(point(t)) mod g(t).
fn point_rows(z: &PointSet, frame: &[[Rational; 3]; 3], cols: &[Monomial]) -> Vec<Vec<Rational>> {
    let apply = |v: &[Rational; 3]| -> [Rational; 3] {
        std::array::from_fn(|i| (0..3).map(|j| &frame[i][j] * &v[j]).sum())
    };
    let mut rows = Vec::new();
    for p in z.points() {
        let q = apply(p.coords());
        rows.push(cols.iter().map(|m| eval_monomial(m, &q)).collect());
    }
    for orbit in z.orbits() {
        let g = orbit.poly();
        let e = orbit.degree();
        let param = orbit.parametrization();
        let w: [Uni; 3] = std::array::from_fn(|i| {
            let mut acc: Uni = Vec::new();
            for (j, pj) in param.iter().enumerate() {
                let scaled: Uni = pj.iter().map(|c| c * &frame[i][j]).collect();
                acc = uni_add(&acc, &scaled);
            }
            acc
        });
        let top = cols.iter().map(Monomial::degree).max().unwrap_or(0) as usize;
        let powers: [Vec<Uni>; 3] = std::array::from_fn(|i| {
            let mut out = vec![vec![Rational::one()]];
            for k in 1..=top {
                out.push(uni_rem(&uni_mul(&out[k - 1], &w[i]), g));
            }
            out
        });
        let values: Vec<Uni> = cols
            .iter()
            .map(|m| {
                let [a, b, c] = m.0.map(|v| v as usize);
                let ab = uni_rem(&uni_mul(&powers[0][a], &powers[1][b]), g);
                uni_rem(&uni_mul(&ab, &powers[2][c]), g)
            })
            .collect();
        for k in 0..e {
            rows.push(
                values
                    .iter()
                    .map(|v| v.get(k).cloned().unwrap_or_else(Rational::zero))
                    .collect(),
            );
        }
    }
    rows
}

fn uni_add(a: &[Rational], b: &[Rational]) -> Uni {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

fn eval_monomial(m: &Monomial, p: &[Rational; 3]) -> Rational {
    let mut v = Rational::one();
    for (x, &e) in p.iter().zip(&m.0) {
        for _ in 0..e {
            v *= x;
        }
    }
    v
}

fn identity() -> [[Rational; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { Rational::one() } else { Rational::zero() }))
}

fn echelon(rows: Vec<Vec<Rational>>, cols: usize, mode: ExecMode) -> IntegerEchelon {
    let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    IntegerEchelon::new(ints, cols, mode)
}

/// The evaluation rows of Z followed by all partial derivatives of order
/// m − 1 at P, over the monomials of degree d.
pub fn conditions_matrix(sys: &FatPointSystem) -> RationalMatrix {
    let d = sys.degree;
    let cols = monomials(d);
    let mut rows = point_rows(&sys.z, &identity(), &cols);
    if sys.multiplicity > 0 {
        let p = sys.point.coords();
        for alpha in monomials(sys.multiplicity - 1) {
            rows.push(
                cols.iter()
                    .map(|mu| match mu.div(&alpha) {
                        Some(rest) => {
                            let mut c = Rational::one();
                            for i in 0..3 {
                                for k in 0..alpha.0[i] {
                                    c *= Rational::from_integer(BigInt::from(mu.0[i] - k));
                                }
                            }
                            c * eval_monomial(&rest, p)
                        }
                        None => Rational::zero(),
                    })
                    .collect(),
            );
        }
    }
    RationalMatrix::from_rows(cols.len(), rows).expect("rows of equal length")
}

/// Integer change of coordinates sending P to a multiple of (0:0:1).
fn adapted_frame(p: &[i64; 3]) -> [[Rational; 3]; 3] {
    let k = (0..3).rev().find(|&i| p[i] != 0).expect("nonzero point");
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let r = |v: i64| Rational::from_integer(BigInt::from(v));
    let mut frame: [[Rational; 3]; 3] = Default::default();
    for (row, &i) in others.iter().enumerate() {
        frame[row] = std::array::from_fn(|_| Rational::zero());
        frame[row][i] = r(p[k]);
        frame[row][k] = r(-p[i]);
    }
    frame[2] = std::array::from_fn(|j| if j == k { Rational::one() } else { Rational::zero() });
    frame
}

/// Monomials of degree d with multiplicity at least m at (0:0:1).
fn adapted_columns(d: u32, m: u32) -> Vec<Monomial> {
    monomials(d).into_iter().filter(|mu| mu.0[0] + mu.0[1] >= m).collect()
}

struct Sample {
    point: [i64; 3],
    frame: [[Rational; 3]; 3],
    cols: Vec<Monomial>,
    ech: IntegerEchelon,
}

impl Sample {
    fn new(z: &PointSet, point: [i64; 3], m: u32, d: u32) -> Self {
        let frame = adapted_frame(&point);
        let cols = adapted_columns(d, m);
        let rows = point_rows(z, &frame, &cols);
        let ech = echelon(rows, cols.len(), ExecMode::Sequential);
        Sample {
            point,
            frame,
            cols,
            ech,
        }
    }

    fn dimension(&self) -> usize {
        self.cols.len() - self.ech.rank()
    }
}

fn draw(rng: &mut ChaCha8Rng, bound: i64, z: &PointSet) -> [i64; 3] {
    loop {
        let p: [i64; 3] = std::array::from_fn(|_| rng.random_range(-bound..=bound));
        if p == [0, 0, 0] {
            continue;
        }
        let coords = p.map(|v| Rational::from_integer(BigInt::from(v)));
        if !in_set(z, &coords) {
            return p;
        }
    }
}

/// The certified generic dimension and the number of samples drawn.
fn generic_dimension(z: &PointSet, m: u32, d: u32, seed: u64, mode: ExecMode) -> Result<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bound = INITIAL_BOUND;
    let mut drawn = 0;
    for _ in 0..ROUNDS {
        let points: Vec<[i64; 3]> = (0..SAMPLES).map(|_| draw(&mut rng, bound, z)).collect();
        drawn += points.len();
        let dims = par::map(mode, &points, |&p| Sample::new(z, p, m, d).dimension());
        let min = *dims.iter().min().expect("samples");
        if dims.iter().filter(|&&v| v == min).count() >= 2 {
            return Ok((min, drawn));
        }
        bound = bound.saturating_mul(2);
    }
    Err(Error::Diagnostic(format!(
        "generic dimension for d = {d}, m = {m} not certified after {drawn} samples"
    )))
}

/// dim [I(Z + mP)]_d for a generic point P.
pub fn system_dimension(z: &PointSet, m: u32, d: u32, seed: u64) -> Result<usize> {
    system_dimension_with(z, m, d, seed, ExecMode::default())
}

pub fn system_dimension_with(z: &PointSet, m: u32, d: u32, seed: u64, mode: ExecMode) -> Result<usize> {
    if d == 0 {
        return Err(Error::InvalidParameter("degree must be positive".into()));
    }
    Ok(generic_dimension(z, m, d, seed, mode)?.0)
}

/// dim [I(Z)]_d.
pub fn ideal_dimension(z: &PointSet, d: u32) -> usize {
    let cols = monomials(d);
    let rows = point_rows(z, &identity(), &cols);
    cols.len() - echelon(rows, cols.len(), ExecMode::Sequential).rank()
}

/// Both sides of the comparison for one (d, m).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterpolationReport {
    pub d: u32,
    pub m: u32,
    pub actual: usize,
    pub expected: usize,
    pub unexpected: bool,
    pub samples: usize,
}

impl InterpolationReport {
    pub fn verdict(&self) -> UnexpectedVerdict {
        UnexpectedVerdict {
            admits: self.unexpected,
            method: Method::Interpolation,
            points: 0,
            a_z: None,
            max_multiplicity: None,
            degrees: if self.unexpected { vec![self.d] } else { Vec::new() },
            irreducible_minimal: None,
        }
    }
}

/// Whether Z has the U(2, d, m)-property:
/// dim [I(Z + mP)]_d > max(dim [I(Z)]_d − C(m+1, 2), 0).
pub fn has_unexpected(z: &PointSet, d: u32, m: u32) -> Result<InterpolationReport> {
    has_unexpected_with(z, d, m, DEFAULT_SEED, ExecMode::default())
}

pub fn has_unexpected_with(z: &PointSet, d: u32, m: u32, seed: u64, mode: ExecMode) -> Result<InterpolationReport> {
    if d == 0 {
        return Err(Error::InvalidParameter("degree must be positive".into()));
    }
    let (actual, samples) = generic_dimension(z, m, d, seed, mode)?;
    let expected = ideal_dimension(z, d).saturating_sub(monomial_count(m.saturating_sub(1)) * usize::from(m > 0));
    Ok(InterpolationReport {
        d,
        m,
        actual,
        expected,
        unexpected: actual > expected,
        samples,
    })
}

/// Tests U(2, j, j − 1) for every j from 2 to |Z| − 2.
pub fn scan_unexpected(z: &PointSet, seed: u64, mode: ExecMode) -> Result<(UnexpectedVerdict, Vec<InterpolationReport>)> {
    let top = (z.len() as u32).saturating_sub(2);
    let js: Vec<u32> = (2..=top).collect();
    let reports = par::map(mode, &js, |&j| has_unexpected_with(z, j, j - 1, seed, ExecMode::Sequential))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let degrees: Vec<u32> = reports.iter().filter(|r| r.unexpected).map(|r| r.d).collect();
    let verdict = UnexpectedVerdict {
        admits: !degrees.is_empty(),
        method: Method::Interpolation,
        points: z.len(),
        a_z: None,
        max_multiplicity: None,
        degrees,
        irreducible_minimal: None,
    };
    Ok((verdict, reports))
}

/// The unique curve of a one-dimensional system, with its fat point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnexpectedCurve {
    pub equation: HomogeneousPolynomial,
    pub point: ProjectivePoint,
}

/// The generator of [I(Z + mP)]_d when that space is one-dimensional,
/// with content one and first nonzero coefficient positive.
pub fn unexpected_curve_equation(z: &PointSet, d: u32, m: u32, seed: u64) -> Result<UnexpectedCurve> {
    let generic = system_dimension(z, m, d, seed)?;
    if generic != 1 {
        return Err(Error::InvalidParameter(format!(
            "the system of degree {d} with multiplicity {m} has dimension {generic}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = loop {
        let s = Sample::new(z, draw(&mut rng, INITIAL_BOUND, z), m, d);
        if s.dimension() == 1 {
            break s;
        }
    };
    let kernel = sample.ech.nullspace().pop().expect("one kernel vector");
    let adapted = HomogeneousPolynomial::from_terms(d, sample.cols.iter().copied().zip(kernel))?;
    let equation = adapted.pullback(&PolynomialMap::linear(&sample.frame)?).normalized();
    let point = ProjectivePoint::from_i64(sample.point[0], sample.point[1], sample.point[2])?;
    let sys = FatPointSystem::new(z.clone(), point.clone(), m, d)?;
    let residual = conditions_matrix(&sys).mul_vec(&equation.coefficient_vector(d)?)?;
    if residual.iter().any(|v| !v.is_zero()) {
        return Err(Error::Diagnostic("extracted curve fails its conditions".into()));
    }
    Ok(UnexpectedCurve { equation, point })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::named::triangle;

    fn empty() -> PointSet {
        PointSet::new(Vec::new()).unwrap()
    }

    #[test]
    fn conditions_shapes() {
        let p = ProjectivePoint::from_i64(3, 5, 7).unwrap();
        let sys = FatPointSystem::new(empty(), p.clone(), 0, 4).unwrap();
        let a = conditions_matrix(&sys);
        assert_eq!((a.rows(), a.cols()), (0, 15));
        let one = PointSet::from_i64(&[[1, 0, 0]]).unwrap();
        let a = conditions_matrix(&FatPointSystem::new(one, p.clone(), 0, 1).unwrap());
        assert_eq!((a.rows(), a.cols(), a.rank()), (1, 3, 1));
        let a = conditions_matrix(&FatPointSystem::new(empty(), p, 3, 4).unwrap());
        assert_eq!((a.rows(), a.rank()), (6, 6));
    }

    #[test]
    fn literal_and_adapted_systems_agree() {
        let z = PointSet::from_i64(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3]]).unwrap();
        for (d, m) in [(2, 1), (3, 2), (4, 3), (3, 1)] {
            let p = [4, -7, 9];
            let point = ProjectivePoint::from_i64(p[0], p[1], p[2]).unwrap();
            let literal = conditions_matrix(&FatPointSystem::new(z.clone(), point, m, d).unwrap());
            let kernel = literal.cols() - literal.rank();
            assert_eq!(Sample::new(&z, p, m, d).dimension(), kernel, "d = {d}, m = {m}");
        }
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(system_dimension(&empty(), 2, 1, 1).unwrap(), 0);
        assert_eq!(system_dimension(&empty(), 0, 3, 1).unwrap(), 10);
        let r = has_unexpected(&triangle(), 2, 1).unwrap();
        assert!(!r.unexpected);
        assert_eq!((r.actual, r.expected), (2, 2));
    }

    #[test]
    fn curve_extraction() {
        // a conic through two points and double at P is the pair of lines
        let z = PointSet::from_i64(&[[1, 0, 0], [0, 1, 0]]).unwrap();
        let c = unexpected_curve_equation(&z, 2, 2, 7).unwrap();
        assert_eq!(c.equation.degree(), 2);
        assert!(unexpected_curve_equation(&z, 1, 2, 7).is_err());
    }
}
