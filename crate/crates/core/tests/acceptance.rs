//! Acceptance criteria 1 to 10. Every comparison is exact; one line per
//! criterion is printed and the process fails if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use freecurves::arrangements::{self, named, tjurina_ordinary, MultiplicityTable};
use freecurves::classify::{
    analyze, cor10_profile, nearly_free_unexpected, splitting_type, unexpected_by_criterion, CurveClass,
};
use freecurves::interpolation::{has_unexpected, scan_unexpected, DEFAULT_SEED};
use freecurves::linalg::modular::prime;
use freecurves::linalg::{subspace_dimension, Rational};
use freecurves::poly::{monomial_count, parse_polynomial, HomogeneousPolynomial};
use freecurves::saturation::defect_via_dimca;
use freecurves::syzygy::{is_syzygy, mdr, syzygy_slice, syzygy_vector, Jacobian, Resolution};
use freecurves::ExecMode;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn same_resolution(computed: &Resolution, expected: &str) -> Check {
    let parsed = Resolution::parse(expected).ok_or_else(|| format!("unparsable resolution {expected}"))?;
    ensure!(&parsed == computed, "resolution {} differs from {expected}", computed.unicode());
    Ok(())
}

fn nonzero_n(n: &BTreeMap<u32, u64>) -> Vec<(u32, u64)> {
    n.iter().filter(|(_, &v)| v > 0).map(|(&k, &v)| (k, v)).collect()
}

fn criterion_1() -> Check {
    for n in 3..=6u32 {
        let f = arrangements::fermat_deleted(n).map_err(err)?;
        let (c, p, defect) = analyze(&f, ExecMode::default()).map_err(err)?;
        ensure!(c.class == CurveClass::NearlyFree, "NF{n}: class {}", c.class);
        ensure!(c.exponents == vec![n + 1, 2 * n - 2, 2 * n - 2], "NF{n}: exponents {:?}", c.exponents);
        ensure!(p.mdr == n + 1, "NF{n}: mdr {}", p.mdr);
        ensure!(c.tau == u64::from(7 * n * n - 11 * n + 6), "NF{n}: tau {}", c.tau);
        ensure!(c.nu == 1 && defect.nu == 1, "NF{n}: nu {}", c.nu);
    }
    Ok(())
}

fn criterion_2() -> Check {
    for n in 3..=4u32 {
        let f = arrangements::fermat(n).map_err(err)?.polynomial;
        let (c, _, _) = analyze(&f, ExecMode::default()).map_err(err)?;
        ensure!(c.class == CurveClass::Free, "fermat {n}: class {}", c.class);
        ensure!(c.exponents == vec![n + 1, 2 * n - 2], "fermat {n}: exponents {:?}", c.exponents);
        ensure!(c.nu == 0, "fermat {n}: nu {}", c.nu);
    }
    Ok(())
}

fn criterion_3() -> Check {
    for k in 2..=4u32 {
        let f = arrangements::conic_family(k).map_err(err)?;
        let (c, p, _) = analyze(&f, ExecMode::default()).map_err(err)?;
        ensure!(p.mdr == 1, "k = {k}: mdr {}", p.mdr);
        ensure!(c.tau == u64::from(2 * (2 * k - 1) * (k - 1)), "k = {k}: tau {}", c.tau);
        ensure!(c.nu == 1, "k = {k}: nu {}", c.nu);
        ensure!(c.exponents == vec![1, 2 * k - 1, 2 * k - 1], "k = {k}: exponents {:?}", c.exponents);
        let poly = |s: String| parse_polynomial(&s).map_err(err);
        let zero = |deg: u32| HomogeneousPolynomial::zero(deg);
        let e = 2 * k - 1;
        let relations = [
            (1, [poly("x".into())?, poly("-y".into())?, zero(1)]),
            (e, [poly(format!("2*z^{e}"))?, zero(e), poly(format!("-x^{}*y^{k}", k - 1))?]),
            (e, [zero(e), poly(format!("2*z^{e}"))?, poly(format!("-x^{k}*y^{}", k - 1))?]),
        ];
        for (r, parts) in relations {
            ensure!(is_syzygy(&f, &parts).map_err(err)?, "k = {k}: relation of degree {r} fails");
            let slice = syzygy_slice(&f, r).map_err(err)?;
            let mut span = slice.basis.clone();
            span.push(syzygy_vector(&parts, r).map_err(err)?);
            ensure!(
                subspace_dimension(&span).map_err(err)? == slice.dimension(),
                "k = {k}: relation of degree {r} outside the computed slice"
            );
        }
    }
    Ok(())
}

fn criterion_4() -> Check {
    type Case<'a> = (&'a str, HomogeneousPolynomial, &'a str, &'a [(u32, u64)]);
    let cases: [Case; 3] = [
        (
            "A9",
            HomogeneousPolynomial::x().mul(&named::maclane_lines()),
            "0 → S(−14) → S²(−13) ⊕ S(−12) → S³(−8) → S",
            &[(10, 1), (11, 1)],
        ),
        ("klein_decic", named::klein_decic(), "0 → S(−15) → S(−14)³ → S(−9)³ → S", &[(12, 1)]),
        ("four_conics", named::four_conics(), "0 → S(−12) → S³(−11) → S³(−7) → S", &[(9, 1)]),
    ];
    for (name, f, expected, n) in cases {
        let (c, p, defect) = analyze(&f, ExecMode::default()).map_err(err)?;
        same_resolution(&p.resolution(), expected).map_err(|e| format!("{name}: {e}"))?;
        ensure!(nonzero_n(&defect.n_values) == n, "{name}: n-values {:?}", nonzero_n(&defect.n_values));
        ensure!(c.almost_free, "{name}: not almost free");
    }
    Ok(())
}

fn criterion_5() -> Check {
    let (c, p, _) = analyze(&named::chmn19(), ExecMode::default()).map_err(err)?;
    same_resolution(&p.resolution(), "0 → S(−30) → S(−29)² ⊕ S(−26) → S(−18)³ → S")?;
    ensure!(c.class == CurveClass::NearlyFree, "class {}", c.class);
    ensure!(c.exponents == vec![8, 11, 11], "exponents {:?}", c.exponents);
    ensure!(nearly_free_unexpected(8, 11), "nearly_free_unexpected(8, 11) is false");
    let r = has_unexpected(&named::chmn19_dual(), 9, 8).map_err(err)?;
    ensure!(r.unexpected, "U(2,9,8) not confirmed: {r:?}");
    Ok(())
}

fn criterion_6() -> Check {
    let z = named::z18();
    let f = z.dual_polynomial();
    let (c, _, defect) = analyze(&f, ExecMode::default()).map_err(err)?;
    ensure!(c.exponents == vec![7, 11, 12], "exponents {:?}", c.exponents);
    ensure!(c.class == CurveClass::PlusOneGenerated && c.level == Some(12), "class {} level {:?}", c.class, c.level);
    let table = z.dual_table().map_err(err)?;
    ensure!(table.t == BTreeMap::from([(2, 22), (3, 13), (4, 7), (5, 5)]), "t-vector {:?}", table.t);
    ensure!(c.tau == 217, "tau {}", c.tau);
    ensure!(c.nu == 2 && c.nu == u64::from(c.exponents[2] - c.exponents[1] + 1), "nu {}", c.nu);
    ensure!(c.splitting == Some((7, 10)), "splitting {:?}", c.splitting);
    ensure!(splitting_type(18, 217, 2).map_err(err)? == (7, 10), "splitting_type(18, 217, 2)");
    let k3 = 2 * 18 - 12 - 3;
    ensure!(defect.sigma == Some(k3), "sigma {:?}", defect.sigma);
    let predicted = cor10_profile(18, 7, 11, 12).map_err(err)?;
    for j in k3..=defect.t() as u32 / 2 {
        ensure!(predicted[&j] == defect.n(j), "n_{j}: predicted {} computed {}", predicted[&j], defect.n(j));
    }
    for (d, m, want) in [(8, 7, true), (9, 8, true), (10, 9, false)] {
        let r = has_unexpected(&z, d, m).map_err(err)?;
        ensure!(r.unexpected == want, "U(2,{d},{m}): {r:?}");
    }
    Ok(())
}

fn criterion_7() -> Check {
    let z = named::z17();
    let (c, _, _) = analyze(&z.dual_polynomial(), ExecMode::default()).map_err(err)?;
    ensure!(c.class == CurveClass::ThreeSyzygy, "class {}", c.class);
    ensure!(c.exponents == vec![7, 11, 11], "exponents {:?}", c.exponents);
    ensure!(c.exponents[0] + c.exponents[1] == 18, "d1 + d2 = {}", c.exponents[0] + c.exponents[1]);
    ensure!(c.tau == 189, "tau {}", c.tau);
    ensure!(c.splitting == Some((7, 9)), "splitting {:?}", c.splitting);
    let r = has_unexpected(&z, 8, 7).map_err(err)?;
    ensure!(r.unexpected, "U(2,8,7) not confirmed: {r:?}");
    Ok(())
}

fn criterion_8() -> Check {
    for n in 3..=7u32 {
        let v = unexpected_by_criterion(&named::fermat_deleted_dual(n).map_err(err)?).map_err(err)?;
        ensure!(v.admits == (n >= 6), "NF{n} dual: admits {}", v.admits);
    }
    for n in 7..=8u32 {
        let f = named::fermat_deleted_twice(n).map_err(err)?;
        let r = mdr(&f).map_err(err)?;
        ensure!(r == n + 1, "NF{n} minus a line: mdr {r}");
    }
    let z = named::fermat_deleted_twice_dual(7).map_err(err)?;
    let v = unexpected_by_criterion(&z).map_err(err)?;
    ensure!(v.degrees == (9..=9).collect::<Vec<u32>>(), "degree range {:?}", v.degrees);
    let r = has_unexpected(&z, 9, 8).map_err(err)?;
    ensure!(r.unexpected, "U(2,9,8) not confirmed: {r:?}");
    Ok(())
}

fn criterion_9() -> Check {
    let f = named::maclane_conics();
    let (c, p, _) = analyze(&f, ExecMode::default()).map_err(err)?;
    ensure!(c.nu == 25, "nu {}", c.nu);
    let table_tau = tjurina_ordinary(&MultiplicityTable::from_counts(&[(2, 16), (3, 32)]));
    ensure!(c.tau == 144 && c.tau == table_tau, "tau {}", c.tau);
    ensure!(c.exponents == vec![10, 10, 10, 15, 15, 15], "exponents {:?}", c.exponents);
    same_resolution(&p.resolution(), "0 → S³(−31) ⊕ S(−27) → S³(−30) ⊕ S³(−25) → S(−15)³ → S")?;
    let product = HomogeneousPolynomial::product(named::maclane_conic_factors().iter());
    ensure!(f.equal_up_to_scalar(&product), "pullback differs from the product of the eight conics");
    Ok(())
}

fn euler_identity() -> Check {
    let mut rng = common::rng(10);
    for i in 0..20 {
        let f = common::random_polynomial(&mut rng);
        let d = f.degree();
        let [fx, fy, fz] = f.partials().map_err(err)?;
        let lhs = HomogeneousPolynomial::x()
            .mul(&fx)
            .add(&HomogeneousPolynomial::y().mul(&fy))
            .and_then(|s| s.add(&HomogeneousPolynomial::z().mul(&fz)))
            .map_err(err)?;
        ensure!(lhs == f.scale(&Rational::from_integer(d.into())), "Euler identity fails on sample {i}");
    }
    Ok(())
}

fn criterion_10() -> Check {
    euler_identity()?;
    let q = prime(40);
    let mut rng = common::rng(11);
    for ex in common::curves() {
        let name = &ex.name;
        let f = &ex.curve;
        let d = f.degree();
        let (c, p, defect) = analyze(f, ExecMode::default()).map_err(err)?;
        let jac = Jacobian::new(f).map_err(err)?;
        for k in 0..=3 * d - 5 {
            let rank = jac.ideal_rows_mod(k, q).echelon().rank();
            let m = monomial_count(k) - rank;
            ensure!(p.milnor_hilbert(k) == m as u64, "{name}: dim M(f)_{k} = {} but rank gives {m}", p.milnor_hilbert(k));
        }
        let dimca = defect_via_dimca(d, p.mdr, c.tau);
        ensure!(dimca == c.nu as i64, "{name}: saturation nu {} formula {dimca}", c.nu);
        ensure!(defect.is_self_dual(), "{name}: n-profile not symmetric");
        if ex.lines {
            ensure!(c.splitting.is_some(), "{name}: splitting not integral");
        }
        for s in 0..2 {
            let g = f.pullback(&common::random_substitution(&mut rng));
            let (c2, p2, _) = analyze(&g, ExecMode::default()).map_err(err)?;
            ensure!(
                (p2.mdr, c2.tau, c2.nu) == (p.mdr, c.tau, c.nu),
                "{name}: substitution {s} changes (mdr, tau, nu) to {:?}",
                (p2.mdr, c2.tau, c2.nu)
            );
        }
    }
    for (name, z) in common::point_sets() {
        let by_criterion = unexpected_by_criterion(&z).map_err(err)?;
        let (by_interpolation, _) = scan_unexpected(&z, DEFAULT_SEED, ExecMode::default()).map_err(err)?;
        ensure!(
            by_criterion.admits == by_interpolation.admits && by_criterion.degrees == by_interpolation.degrees,
            "{name}: criterion {:?} interpolation {:?}",
            by_criterion.degrees,
            by_interpolation.degrees
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Check);
    let criteria: [Criterion; 10] = [
        ("NF_n nearly free family", criterion_1),
        ("Fermat freeness", criterion_2),
        ("conic family", criterion_3),
        ("almost free curves", criterion_4),
        ("chmn19 line arrangement", criterion_5),
        ("Z18", criterion_6),
        ("Z17", criterion_7),
        ("NF_n duals and deletions", criterion_8),
        ("MacLane conics", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match run() {
            Ok(()) => println!("PASS {:>2} {name} [{:.1?}]", i + 1, start.elapsed()),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
