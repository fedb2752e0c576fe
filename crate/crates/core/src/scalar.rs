//! Scalar rings the dual-complex algebra is generic over, and the exact
//! rational text format.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical form (reduced, positive
/// denominator). Structural equality is mathematical equality.
pub type Rational = BigRational;

/// A commutative ring with a partial inverse.
///
/// Implemented for [`Rational`] (exact), [`crate::QuadraticElement`]
/// (exact, one square-root extension) and `f64` (approximate).
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// `self / rhs`, or an error when `rhs` has no inverse.
    fn try_div(&self, rhs: &Self) -> Result<Self>;

    /// Embeds a rational into this ring.
    fn from_rational(value: &Rational) -> Self;
}

impl Scalar for Rational {
    fn try_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }

    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }
}

impl Scalar for f64 {
    fn try_div(&self, rhs: &Self) -> Result<Self> {
        if *rhs == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }

    fn from_rational(value: &Rational) -> Self {
        value.to_f64().unwrap_or(f64::NAN)
    }
}

/// Arithmetic operations exposed by [`rat_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Unary; the second operand is ignored.
    Neg,
}

pub fn rat_arith(op: RatOp, x: &Rational, y: &Rational) -> Result<Rational> {
    Ok(match op {
        RatOp::Add => x + y,
        RatOp::Sub => x - y,
        RatOp::Mul => x * y,
        RatOp::Div => x.try_div(y)?,
        RatOp::Neg => -x,
    })
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"-3"`, `"+7"` or `"5/6"`. The denominator must be unsigned and
/// nonzero; the result is reduced.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(text.to_string());
    let trimmed = text.trim();
    let (numer, denom) = match trimmed.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (trimmed, None),
    };
    let digits = numer.strip_prefix(['+', '-']).unwrap_or(numer);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = match denom {
        Some(q) => {
            if q.is_empty() || !q.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            q.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Renders a rational as `"p"` or `"p/q"`.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub(crate) fn require_positive_k(k: &Rational) -> Result<()> {
    if k.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveK(format_rational(k)))
    }
}

/// `base^exp` for any integer exponent; negative exponents invert.
pub fn pow_signed(base: &Rational, exp: i64) -> Result<Rational> {
    let magnitude = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp >= 0 {
        Ok(magnitude)
    } else {
        Rational::one().try_div(&magnitude)
    }
}

/// `(-1)^exp` as a rational.
pub fn parity_sign(exp: i64) -> Rational {
    if exp.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}
