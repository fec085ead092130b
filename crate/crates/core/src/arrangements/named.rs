//! Named curves, families and point sets.

use crate::error::{Error, Result};
use crate::linalg::rational::rat;
use crate::poly::{parse_polynomial, HomogeneousPolynomial, PolynomialMap, ProjectivePoint};

use super::orbit::{PointOrbit, Uni};
use super::{dual_points, kummer_pullback, LineArrangement, MultiplicityTable, PointSet};

/// A curve given by its rational product polynomial together with a
/// multiplicity table known in closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicArrangement {
    pub polynomial: HomogeneousPolynomial,
    pub table: MultiplicityTable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Named {
    Curve(HomogeneousPolynomial),
    Points(PointSet),
}

fn parse(s: &str) -> HomogeneousPolynomial {
    parse_polynomial(s).expect("built-in expression")
}

fn need(n: u32, min: u32, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter(format!("{what} must be at least {min}, got {n}")));
    }
    Ok(())
}

fn fermat_polynomial(n: u32) -> HomogeneousPolynomial {
    parse(&format!("(x^{n} - y^{n})*(y^{n} - z^{n})*(z^{n} - x^{n})"))
}

/// The full Fermat arrangement (x^n − y^n)(y^n − z^n)(z^n − x^n):
/// n² triple points and three points of multiplicity n.
pub fn fermat(n: u32) -> Result<SymbolicArrangement> {
    need(n, 3, "n")?;
    let n64 = u64::from(n);
    Ok(SymbolicArrangement {
        polynomial: fermat_polynomial(n),
        table: MultiplicityTable::from_counts(&[(3, n64 * n64), (n, 3)]),
    })
}

/// NF_n: the Fermat arrangement with the line x − y removed.
pub fn fermat_deleted(n: u32) -> Result<HomogeneousPolynomial> {
    need(n, 3, "n")?;
    fermat_polynomial(n).div_exact(&parse("x - y"))
}

pub fn fermat_deleted_table(n: u32) -> Result<MultiplicityTable> {
    need(n, 3, "n")?;
    let n64 = u64::from(n);
    Ok(MultiplicityTable::from_counts(&[
        (n, 2),
        (n - 1, 1),
        (3, n64 * n64 - n64),
        (2, n64),
    ]))
}

/// NF_n with the further line y − z removed, of degree 3n − 2.
pub fn fermat_deleted_twice(n: u32) -> Result<HomogeneousPolynomial> {
    need(n, 3, "n")?;
    fermat_deleted(n)?.div_exact(&parse("y - z"))
}

pub fn fermat_deleted_twice_table(n: u32) -> Result<MultiplicityTable> {
    need(n, 3, "n")?;
    let n64 = u64::from(n);
    Ok(MultiplicityTable::from_counts(&[
        (n, 1),
        (n - 1, 2),
        (3, (n64 - 1) * (n64 - 1)),
        (2, 2 * n64 - 2),
    ]))
}

/// t^n − (−1)^n, whose roots are −ζ for the n-th roots of unity ζ.
fn shifted_roots(n: u32) -> Uni {
    let mut g = vec![rat(0); n as usize + 1];
    g[0] = rat(if n.is_multiple_of(2) { -1 } else { 1 });
    g[n as usize] = rat(1);
    g
}

/// (t^n − (−1)^n)/(t + 1): the same roots without t = −1.
fn shifted_roots_deleted(n: u32) -> Uni {
    (0..n)
        .map(|k| rat(if (n - 1 - k).is_multiple_of(2) { 1 } else { -1 }))
        .collect()
}

// Line x − ζy is dual to (1 : −ζ : 0), and cyclically for the other groups.
fn fermat_orbits(delete_xy: bool, delete_yz: bool, n: u32) -> Result<Vec<PointOrbit>> {
    let pick = |deleted: bool| {
        if deleted {
            shifted_roots_deleted(n)
        } else {
            shifted_roots(n)
        }
    };
    Ok(vec![
        PointOrbit::new(2, 0, 1, pick(delete_xy))?,
        PointOrbit::new(0, 1, 2, pick(delete_yz))?,
        PointOrbit::new(1, 2, 0, shifted_roots(n))?,
    ])
}

/// The 3n points dual to the lines of the Fermat arrangement.
pub fn fermat_dual(n: u32) -> Result<PointSet> {
    let table = fermat(n)?.table;
    Ok(PointSet::with_orbits(Vec::new(), fermat_orbits(false, false, n)?)?.with_dual_table(table))
}

/// The 3n − 1 points dual to the lines of NF_n.
pub fn fermat_deleted_dual(n: u32) -> Result<PointSet> {
    let table = fermat_deleted_table(n)?;
    Ok(PointSet::with_orbits(Vec::new(), fermat_orbits(true, false, n)?)?.with_dual_table(table))
}

/// The 3n − 2 points dual to the lines of NF_n minus y − z.
pub fn fermat_deleted_twice_dual(n: u32) -> Result<PointSet> {
    let table = fermat_deleted_twice_table(n)?;
    Ok(PointSet::with_orbits(Vec::new(), fermat_orbits(true, true, n)?)?.with_dual_table(table))
}

/// C_k : x^k y^k + z^{2k}.
pub fn conic_family(k: u32) -> Result<HomogeneousPolynomial> {
    need(k, 2, "k")?;
    kummer_pullback(&parse("x*y + z^2"), k)
}

pub fn maclane_lines() -> HomogeneousPolynomial {
    parse("(x^2 + x*y + y^2)*(y^3 - z^3)*(z^3 - x^3)")
}

/// Ψ = (x² + 2y², y² + 3z², z² + 5x²).
pub fn maclane_map() -> PolynomialMap {
    PolynomialMap::new([parse("x^2 + 2*y^2"), parse("y^2 + 3*z^2"), parse("z^2 + 5*x^2")])
        .expect("equal degrees")
}

/// The eight conics of Ψ*(maclane_lines) over Q: two rational conics and
/// the norms A² − AB + B² of the three conjugate pairs A + εB, ε³ = 1.
pub fn maclane_conic_factors() -> Vec<HomogeneousPolynomial> {
    let norm = |a: &str, b: &str| {
        let (a, b) = (parse(a), parse(b));
        a.mul(&a)
            .sub(&a.mul(&b))
            .and_then(|s| s.add(&b.mul(&b)))
            .expect("equal degrees")
    };
    vec![
        parse("x^2 - 1/2*y^2 + 1/4*z^2"),
        parse("x^2 - 1/5*y^2 - 2/5*z^2"),
        norm("x^2 + 3*y^2 + 3*z^2", "y^2 + 3*z^2"),
        norm("x^2 + 1/5*y^2 + 4/5*z^2", "1/5*y^2 + 3/5*z^2"),
        norm("x^2 + 2/31*y^2 + 6/31*z^2", "-10/31*y^2 + 1/31*z^2"),
    ]
}

pub fn maclane_conics() -> HomogeneousPolynomial {
    maclane_lines().pullback(&maclane_map())
}

pub fn klein_decic() -> HomogeneousPolynomial {
    parse(
        "320*x^2*y^2*z^6 - 160*x^3*y^3*z^4 + 20*x^4*y^4*z^2 + 6*x^5*y^5 + x^10 + y^10 \
         - 4*(x^5 + y^5)*(32*z^5 - 20*x*y*z^3 + 5*x^2*y^2*z)",
    )
}

pub fn four_conics() -> HomogeneousPolynomial {
    parse("(x*y - z^2)*(x*y + z^2)*(x^2 + y^2 - 2*z^2)*(x^2 + y^2 + 2*z^2)")
}

pub const NINETEEN_LINES: [[i64; 3]; 19] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 0],
    [1, -1, 0],
    [2, 1, 0],
    [2, -1, 0],
    [1, 0, 1],
    [1, 0, -1],
    [0, 1, 1],
    [0, 1, -1],
    [1, 0, 2],
    [1, 0, -2],
    [0, 1, 2],
    [0, 1, -2],
    [1, -1, 1],
    [1, -1, -1],
    [1, -1, 2],
    [1, -1, -2],
];

pub fn chmn19_lines() -> LineArrangement {
    LineArrangement::from_coefficients(&NINETEEN_LINES).expect("distinct lines")
}

pub fn chmn19() -> HomogeneousPolynomial {
    chmn19_lines().polynomial()
}

/// The 19 points dual to the lines of [`chmn19`].
pub fn chmn19_dual() -> PointSet {
    dual_points(&chmn19_lines())
}

pub const Z18: [[i64; 3]; 18] = [
    [0, 1, 0],
    [-1, 1, 0],
    [-2, 1, 0],
    [-3, 1, 0],
    [-3, 2, 0],
    [4, 0, -1],
    [1, 1, -1],
    [2, 1, -1],
    [3, 1, -1],
    [4, 1, -1],
    [0, 2, -1],
    [1, 2, -1],
    [2, 2, -1],
    [0, 3, -1],
    [1, 3, -1],
    [-2, 3, -1],
    [-1, 3, -1],
    [-2, 4, -1],
];

pub fn z18() -> PointSet {
    PointSet::from_i64(&Z18).expect("distinct points")
}

/// Z18 without (−2, 1, 0).
pub fn z17() -> PointSet {
    let z = z18();
    let i = z
        .points()
        .iter()
        .position(|p| *p == ProjectivePoint::from_i64(-2, 1, 0).expect("nonzero"))
        .expect("listed point");
    z.without(i)
}

pub fn triangle() -> PointSet {
    PointSet::from_i64(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).expect("distinct points")
}

pub const NAMES: &[&str] = &[
    "maclane_lines",
    "maclane_conics",
    "A9",
    "klein_decic",
    "four_conics",
    "chmn19",
    "chmn19_dual",
    "Z18",
    "Z17",
    "triangle",
];

pub const FAMILIES: &[&str] = &[
    "fermat",
    "fermat_deleted",
    "fermat_deleted_twice",
    "conic_family",
    "fermat_dual",
    "fermat_deleted_dual",
    "fermat_deleted_twice_dual",
];

/// A parameter-free named object.
pub fn named(name: &str) -> Result<Named> {
    Ok(match name {
        "maclane_lines" => Named::Curve(maclane_lines()),
        "maclane_conics" => Named::Curve(maclane_conics()),
        "A9" => Named::Curve(parse("x").mul(&maclane_lines())),
        "klein_decic" => Named::Curve(klein_decic()),
        "four_conics" => Named::Curve(four_conics()),
        "chmn19" => Named::Curve(chmn19()),
        "chmn19_dual" => Named::Points(chmn19_dual()),
        "Z18" => Named::Points(z18()),
        "Z17" => Named::Points(z17()),
        "triangle" => Named::Points(triangle()),
        _ if FAMILIES.contains(&name) => {
            return Err(Error::InvalidParameter(format!("{name} needs a parameter")))
        }
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

/// A named object or a member of a named family.
pub fn generate(name: &str, param: Option<u32>) -> Result<Named> {
    if !FAMILIES.contains(&name) {
        if param.is_some() && NAMES.contains(&name) {
            return Err(Error::InvalidParameter(format!("{name} takes no parameter")));
        }
        return named(name);
    }
    let n = param.ok_or_else(|| Error::InvalidParameter(format!("{name} needs a parameter")))?;
    Ok(match name {
        "fermat" => Named::Curve(fermat(n)?.polynomial),
        "fermat_deleted" => Named::Curve(fermat_deleted(n)?),
        "fermat_deleted_twice" => Named::Curve(fermat_deleted_twice(n)?),
        "conic_family" => Named::Curve(conic_family(n)?),
        "fermat_dual" => Named::Points(fermat_dual(n)?),
        "fermat_deleted_dual" => Named::Points(fermat_deleted_dual(n)?),
        _ => Named::Points(fermat_deleted_twice_dual(n)?),
    })
}

#[cfg(test)]
mod tests {
    use super::super::{dual_arrangement, line_combinatorics, tjurina_ordinary};
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn fermat_tables() {
        let f = fermat(3).unwrap();
        assert_eq!(f.polynomial.degree(), 9);
        assert_eq!(f.table.t, BTreeMap::from([(3, 12)]));
        assert_eq!(fermat(4).unwrap().table.t, BTreeMap::from([(3, 16), (4, 3)]));
        assert_eq!(tjurina_ordinary(&fermat(5).unwrap().table), 148);
        assert!(fermat(2).is_err());
        let nf3 = fermat_deleted_table(3).unwrap();
        assert_eq!(nf3.t, BTreeMap::from([(2, 4), (3, 8)]));
        for n in 3..=9u32 {
            let d = u64::from(3 * n - 1);
            let t = fermat_deleted_table(n).unwrap();
            assert_eq!(t.incidence_count(), d * (d - 1) / 2);
            let n64 = u64::from(n);
            assert_eq!(tjurina_ordinary(&t), 7 * n64 * n64 - 11 * n64 + 6);
            let d = d - 1;
            assert_eq!(fermat_deleted_twice_table(n).unwrap().incidence_count(), d * (d - 1) / 2);
        }
    }

    #[test]
    fn deletions_divide() {
        let nf = fermat_deleted(3).unwrap();
        assert_eq!(nf.degree(), 8);
        assert_eq!(nf.mul(&parse("x - y")), fermat(3).unwrap().polynomial);
        let twice = fermat_deleted_twice(7).unwrap();
        assert_eq!(twice.degree(), 19);
        assert_eq!(twice.mul(&parse("y - z")), fermat_deleted(7).unwrap());
    }

    #[test]
    fn orbit_duals_match() {
        for n in 3..=6 {
            let z = fermat_deleted_dual(n).unwrap();
            assert_eq!(z.len(), 3 * n as usize - 1);
            assert!(z.dual_polynomial().equal_up_to_scalar(&fermat_deleted(n).unwrap()));
            let z = fermat_deleted_twice_dual(n).unwrap();
            assert!(z.dual_polynomial().equal_up_to_scalar(&fermat_deleted_twice(n).unwrap()));
            let z = fermat_dual(n).unwrap();
            assert!(z.dual_polynomial().equal_up_to_scalar(&fermat(n).unwrap().polynomial));
        }
    }

    #[test]
    fn conic_family_and_kummer() {
        assert_eq!(conic_family(2).unwrap(), parse("x^2*y^2 + z^4"));
        assert!(conic_family(1).is_err());
    }

    #[test]
    fn point_sets() {
        let z18 = z18();
        let z17 = z17();
        assert_eq!(z17.len(), 17);
        assert!(z18.points().iter().filter(|p| !z17.points().contains(p)).eq([&ProjectivePoint::from_i64(-2, 1, 0).unwrap()]));
        let t18 = line_combinatorics(&dual_arrangement(&z18).unwrap()).unwrap();
        assert_eq!(t18.t, BTreeMap::from([(2, 22), (3, 13), (4, 7), (5, 5)]));
        assert_eq!(tjurina_ordinary(&t18), 217);
        let t17 = line_combinatorics(&dual_arrangement(&z17).unwrap()).unwrap();
        assert_eq!(t17.t, BTreeMap::from([(2, 20), (3, 14), (4, 9), (5, 2)]));
        assert_eq!(tjurina_ordinary(&t17), 189);
    }

    #[test]
    fn chmn_table() {
        let lines = crate::arrangements::LineArrangement::new(
            chmn19_lines().into_iter().map(parse).collect(),
        )
        .unwrap();
        assert_eq!(lines.polynomial(), chmn19());
        let t = line_combinatorics(&lines).unwrap();
        assert_eq!(t.incidence_count(), 171);
    }

    fn chmn19_lines() -> Vec<&'static str> {
        vec![
            "x", "y", "z", "x + y", "x - y", "2*x + y", "2*x - y", "x + z", "x - z", "y + z",
            "y - z", "x + 2*z", "x - 2*z", "y + 2*z", "y - 2*z", "x - y + z", "x - y - z",
            "x - y + 2*z", "x - y - 2*z",
        ]
    }

    #[test]
    fn named_objects() {
        let Named::Curve(k) = named("klein_decic").unwrap() else { panic!() };
        assert_eq!(k.degree(), 10);
        let Named::Curve(c) = named("four_conics").unwrap() else { panic!() };
        assert_eq!(c.degree(), 8);
        let Named::Curve(a9) = named("A9").unwrap() else { panic!() };
        assert_eq!(a9.degree(), 9);
        assert!(matches!(named("nope"), Err(Error::UnknownName(_))));
        assert!(generate("conic_family", Some(1)).is_err());
        assert!(generate("fermat", None).is_err());
        let Named::Points(z) = generate("Z17", None).unwrap() else { panic!() };
        assert_eq!(z.len(), 17);
    }

    #[test]
    fn maclane_conics_factor() {
        let f = maclane_conics();
        assert_eq!(f.degree(), 16);
        let product = HomogeneousPolynomial::product(&maclane_conic_factors());
        assert!(f.equal_up_to_scalar(&product));
    }
}
