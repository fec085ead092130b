//! JSON forms of polynomials and point sets.
//!
//! Polynomials are `{"degree": d, "terms": [{"num", "den", "exp"}]}` with
//! integers as decimal strings and terms in monomial order. Point sets are
//! `{"points": [[a, b, c], ...]}` with rational strings; sets with Galois
//! orbits add `"orbits"` and the attached `"dual_multiplicities"`.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::arrangements::{MultiplicityTable, PointOrbit, PointSet};
use crate::error::{Error, Result};
use crate::linalg::rational::parse_rational;
use crate::linalg::Rational;
use crate::poly::{HomogeneousPolynomial, Monomial, ProjectivePoint};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub num: String,
    pub den: String,
    pub exp: [u32; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub degree: u32,
    pub terms: Vec<TermJson>,
}

impl From<&HomogeneousPolynomial> for PolynomialJson {
    fn from(f: &HomogeneousPolynomial) -> Self {
        let mut terms: Vec<(&Monomial, &Rational)> = f.terms().collect();
        terms.sort_by_key(|(m, _)| m.index());
        PolynomialJson {
            degree: f.degree(),
            terms: terms
                .into_iter()
                .map(|(m, c)| TermJson {
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                    exp: m.0,
                })
                .collect(),
        }
    }
}

impl TryFrom<PolynomialJson> for HomogeneousPolynomial {
    type Error = Error;

    fn try_from(p: PolynomialJson) -> Result<Self> {
        let terms = p
            .terms
            .into_iter()
            .map(|t| Ok((Monomial(t.exp), parse_rational(&format!("{}/{}", t.num, t.den))?)))
            .collect::<Result<Vec<_>>>()?;
        HomogeneousPolynomial::from_terms(p.degree, terms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    pub zero: usize,
    pub unit: usize,
    pub free: usize,
    /// Coefficients of the defining polynomial, constant term first.
    pub poly: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetJson {
    pub points: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub orbits: Vec<OrbitJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_multiplicities: Option<BTreeMap<u32, u64>>,
}

fn rational_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl From<&PointSet> for PointSetJson {
    fn from(z: &PointSet) -> Self {
        PointSetJson {
            points: z
                .points()
                .iter()
                .map(|p| p.coords().clone().map(|c| rational_string(&c)))
                .collect(),
            orbits: z
                .orbits()
                .iter()
                .map(|o| OrbitJson {
                    zero: o.zero,
                    unit: o.unit,
                    free: o.free,
                    poly: o.poly().iter().map(rational_string).collect(),
                })
                .collect(),
            dual_multiplicities: z.attached_table().map(|t| t.t.clone()),
        }
    }
}

impl TryFrom<PointSetJson> for PointSet {
    type Error = Error;

    fn try_from(j: PointSetJson) -> Result<Self> {
        let points = j
            .points
            .iter()
            .map(|p| {
                let [a, b, c] = p;
                ProjectivePoint::new([parse_rational(a)?, parse_rational(b)?, parse_rational(c)?])
            })
            .collect::<Result<Vec<_>>>()?;
        let orbits = j
            .orbits
            .into_iter()
            .map(|o| {
                let poly = o.poly.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>()?;
                PointOrbit::new(o.zero, o.unit, o.free, poly)
            })
            .collect::<Result<Vec<_>>>()?;
        let z = PointSet::with_orbits(points, orbits)?;
        Ok(match j.dual_multiplicities {
            Some(t) => z.with_dual_table(MultiplicityTable {
                t,
                singular_points: Vec::new(),
            }),
            None => z,
        })
    }
}

/// Serializes compactly, or indented with `pretty`.
pub fn to_string<T: Serialize>(value: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("serializable value")
}

pub fn from_str<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn polynomial_to_string(f: &HomogeneousPolynomial, pretty: bool) -> String {
    to_string(&PolynomialJson::from(f), pretty)
}

pub fn polynomial_from_str(s: &str) -> Result<HomogeneousPolynomial> {
    from_str::<PolynomialJson>(s)?.try_into()
}

pub fn point_set_to_string(z: &PointSet, pretty: bool) -> String {
    to_string(&PointSetJson::from(z), pretty)
}

pub fn point_set_from_str(s: &str) -> Result<PointSet> {
    from_str::<PointSetJson>(s)?.try_into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::named::{fermat_deleted_dual, z17};
    use crate::poly::parse_polynomial;

    #[test]
    fn polynomial_round_trip() {
        let f = parse_polynomial("x^2 - 1/3*y*z + 7*z^2").unwrap();
        let s = polynomial_to_string(&f, false);
        assert_eq!(
            s,
            r#"{"degree":2,"terms":[{"num":"1","den":"1","exp":[2,0,0]},{"num":"-1","den":"3","exp":[0,1,1]},{"num":"7","den":"1","exp":[0,0,2]}]}"#
        );
        assert_eq!(polynomial_from_str(&s).unwrap(), f);
        assert!(polynomial_from_str(r#"{"degree":1,"terms":[{"num":"1","den":"0","exp":[1,0,0]}]}"#).is_err());
        assert!(polynomial_from_str(r#"{"degree":2,"terms":[{"num":"1","den":"1","exp":[1,0,0]}]}"#).is_err());
    }

    #[test]
    fn point_sets_round_trip() {
        let z = z17();
        let s = point_set_to_string(&z, true);
        let back = point_set_from_str(&s).unwrap();
        assert_eq!(back, z);
        assert_eq!(point_set_to_string(&back, true), s);
        let w = fermat_deleted_dual(4).unwrap();
        let s = point_set_to_string(&w, false);
        assert!(s.contains("\"orbits\"") && s.contains("\"dual_multiplicities\""));
        let back = point_set_from_str(&s).unwrap();
        assert_eq!(back.len(), 11);
        assert_eq!(back.dual_table().unwrap(), w.dual_table().unwrap());
    }
}
