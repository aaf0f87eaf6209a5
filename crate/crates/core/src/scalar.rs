//! Scalar abstractions. All exact arithmetic in the crate is generic over
//! these traits; the concrete instantiations used everywhere are the
//! arbitrary-precision aliases [`Rat`] and [`Int`].

use num_traits::{FromPrimitive, One, Signed, Zero};
use std::fmt;
use std::ops::{Div, Mul, Neg, Sub};

/// Coefficient field for polynomial arithmetic.
pub trait Coeff:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Signed
    + FromPrimitive
{
}

impl<T> Coeff for T where
    T: Clone
        + fmt::Debug
        + fmt::Display
        + PartialEq
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
        + Div<Output = Self>
        + Signed
        + FromPrimitive
{
}

/// Exact integer domain for fraction-free elimination. Division is only
/// ever performed when it is exact.
pub trait ExactInt:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Signed
    + num_integer::Integer
    + FromPrimitive
{
}

impl<T> ExactInt for T where
    T: Clone
        + fmt::Debug
        + PartialEq
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
        + Div<Output = Self>
        + Signed
        + num_integer::Integer
        + FromPrimitive
{
}

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision integer used by the elimination kernel.
pub type Int = num_bigint::BigInt;

/// Shorthand for building an exact rational from a machine integer.
pub fn rat(k: i64) -> Rat {
    Rat::from_integer(Int::from(k))
}

/// Builds the exact rational `num / den`.
pub fn ratio(num: i64, den: i64) -> Rat {
    assert!(den != 0);
    Rat::new(Int::from(num), Int::from(den))
}

/// Parses a rational literal of the form `a` or `a/b`.
pub fn parse_rat(text: &str) -> crate::error::Result<Rat> {
    let text = text.trim();
    let bad = || crate::error::Error::Parse(format!("expected a rational literal, got {text:?}"));
    match text.split_once('/') {
        None => {
            let n: i64 = text.parse().map_err(|_| bad())?;
            Ok(rat(n))
        }
        Some((a, b)) => {
            let n: i64 = a.trim().parse().map_err(|_| bad())?;
            let d: i64 = b.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(crate::error::Error::Parse("zero denominator".into()));
            }
            Ok(ratio(n, d))
        }
    }
}

/// Integer power with negative exponents allowed (the base must be nonzero
/// when `e < 0`).
pub fn rat_pow(base: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow::pow(base.clone(), e as usize)
    } else {
        num_traits::pow::pow(base.clone(), (-e) as usize).recip()
    }
}
