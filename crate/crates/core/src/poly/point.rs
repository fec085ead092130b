use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::rational::Rational;

/// Point of the projective plane with rational coordinates.
///
/// The coordinates are kept as given; equality and hashing are projective.
/// [`ProjectivePoint::canonical`] scales the first nonzero coordinate to one.
#[derive(Debug, Clone)]
pub struct ProjectivePoint {
    coords: [Rational; 3],
}

impl ProjectivePoint {
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidParameter("all coordinates are zero".into()));
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new([a, b, c].map(|v| Rational::from_integer(v.into())))
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }

    /// Coordinates scaled so that the first nonzero one equals one.
    pub fn canonical(&self) -> [Rational; 3] {
        let lead = self
            .coords
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero point")
            .clone();
        self.coords.clone().map(|c| c / &lead)
    }

    /// Projective equality via the cross product of coordinate triples.
    pub fn same_point(a: &[Rational; 3], b: &[Rational; 3]) -> bool {
        cross(a, b).iter().all(|c| c.is_zero())
    }
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        Self::same_point(&self.coords, &other.coords)
    }
}

impl Eq for ProjectivePoint {}

impl Hash for ProjectivePoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

/// Cross product; for two points it is the line through them, for two
/// lines their intersection point.
pub fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Determinant of three coordinate triples.
pub fn det3(a: &[Rational; 3], b: &[Rational; 3], c: &[Rational; 3]) -> Rational {
    let x = cross(b, c);
    &a[0] * &x[0] + &a[1] * &x[1] + &a[2] * &x[2]
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.coords[0], self.coords[1], self.coords[2])
    }
}
