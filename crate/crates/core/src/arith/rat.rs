//! Arbitrary-precision rationals.
//!
//! `Rat` is `num_rational::BigRational`, which is always kept in lowest terms
//! with a positive denominator. This module adds the handful of helpers the
//! rest of the crate needs: construction from small integers, integer powers,
//! and the `num/den` text form used in every report.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// `n/d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `base^e` for any integer exponent. Negative exponents of zero are an error.
pub fn pow(base: &Rat, e: i64) -> Result<Rat> {
    if e < 0 && base.is_zero() {
        return Err(Error::DivisionByZero(format!("0^{e}")));
    }
    let e32 = i32::try_from(e).map_err(|_| Error::Domain(format!("exponent {e} out of range")))?;
    Ok(num_traits::Pow::pow(base, e32))
}

/// Checked quotient.
pub fn div(a: &Rat, b: &Rat) -> Result<Rat> {
    if b.is_zero() {
        return Err(Error::DivisionByZero(format!("{} / 0", fmt(a))));
    }
    Ok(a / b)
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn fmt(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q`, or `-p/q`. Decimal points are rejected.
pub fn parse(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero(format!("{s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Bit length of the larger of numerator and denominator; a rough size gauge.
pub fn height(r: &Rat) -> u64 {
    r.numer().abs().bits().max(r.denom().bits())
}

/// Least common multiple of all denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    use num_integer::Integer;
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}
