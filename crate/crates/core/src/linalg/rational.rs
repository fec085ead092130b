//! Rational scalars and conversions to and from integer vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"a"` or `"a/b"` with decimal integers.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {num:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {den:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(num, den))
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a Rational>,
{
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Greatest common divisor of the entries (zero for the zero vector).
pub fn content(values: &[BigInt]) -> BigInt {
    values.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

/// Scales a rational vector to an integer vector with content one.
///
/// The scale factor is positive, so signs are preserved.
pub fn primitive_integer_vector(values: &[Rational]) -> Vec<BigInt> {
    let l = denominator_lcm(values);
    let ints: Vec<BigInt> = values
        .iter()
        .map(|q| q.numer() * (&l / q.denom()))
        .collect();
    make_primitive(ints)
}

/// Divides an integer vector by its content.
pub fn make_primitive(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    let g = content(&ints);
    if !g.is_zero() && !g.is_one() {
        for v in ints.iter_mut() {
            *v = &*v / &g;
        }
    }
    ints
}

/// Multiplies through by the denominator lcm, keeping the scale.
pub fn clear_denominators(values: &[Rational]) -> Vec<BigInt> {
    let l = denominator_lcm(values);
    values
        .iter()
        .map(|q| q.numer() * (&l / q.denom()))
        .collect()
}

/// Bit length of the numerator and denominator together.
pub fn rational_bits(q: &Rational) -> u64 {
    q.numer().abs().bits() + q.denom().bits()
}

/// `true` when the integer fits comfortably into a signed 64-bit word.
pub fn small(v: &BigInt) -> bool {
    v.bits() < 63
}
