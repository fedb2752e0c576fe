//! The quadratic field ℚ(√D) with D = 1 + k, home of the characteristic
//! roots of x² = 2x + k.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, require_positive_k, Rational, Scalar};

/// `rational_part + radical_part·√radicand`.
///
/// A perfect-square radicand is folded into the rational part on
/// construction, so two elements are equal exactly when their parts are.
/// Elements with a zero radical part are plain rationals and combine with
/// any radicand.
#[derive(Clone, Debug)]
pub struct QuadraticElement {
    rational_part: Rational,
    radical_part: Rational,
    radicand: Rational,
}

fn rational_sqrt(value: &Rational) -> Option<Rational> {
    if value.is_negative() {
        return None;
    }
    let numer = value.numer().sqrt();
    let denom = value.denom().sqrt();
    if &(&numer * &numer) == value.numer() && &(&denom * &denom) == value.denom() {
        Some(Rational::new(numer, denom))
    } else {
        None
    }
}

impl QuadraticElement {
    pub fn new(
        rational_part: Rational,
        radical_part: Rational,
        radicand: Rational,
    ) -> Result<Self> {
        if !radicand.is_positive() {
            return Err(Error::NonPositiveRadicand(format_rational(&radicand)));
        }
        Ok(Self::normalized(rational_part, radical_part, radicand))
    }

    fn normalized(rational_part: Rational, radical_part: Rational, radicand: Rational) -> Self {
        match rational_sqrt(&radicand) {
            Some(root) if !radical_part.is_zero() => Self {
                rational_part: rational_part + radical_part * root,
                radical_part: Rational::zero(),
                radicand,
            },
            _ => Self {
                rational_part,
                radical_part,
                radicand,
            },
        }
    }

    /// A rational embedded with the placeholder radicand 1.
    pub fn rational(value: Rational) -> Self {
        Self {
            rational_part: value,
            radical_part: Rational::zero(),
            radicand: Rational::one(),
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational_part
    }

    pub fn radical_part(&self) -> &Rational {
        &self.radical_part
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radical_part.is_zero()
    }

    fn common_radicand(&self, other: &Self) -> Result<Rational> {
        if other.radical_part.is_zero() || self.radicand == other.radicand {
            Ok(self.radicand.clone())
        } else if self.radical_part.is_zero() {
            Ok(other.radicand.clone())
        } else {
            Err(Error::RadicandMismatch(
                format_rational(&self.radicand),
                format_rational(&other.radicand),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let radicand = self.common_radicand(other)?;
        Ok(Self::normalized(
            &self.rational_part + &other.rational_part,
            &self.radical_part + &other.radical_part,
            radicand,
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other.clone())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let radicand = self.common_radicand(other)?;
        let rational_part = &self.rational_part * &other.rational_part
            + &self.radical_part * &other.radical_part * &radicand;
        let radical_part =
            &self.rational_part * &other.radical_part + &self.radical_part * &other.rational_part;
        Ok(Self::normalized(rational_part, radical_part, radicand))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.common_radicand(other)?;
        // x / y = x·ȳ / (y·ȳ), and y·ȳ is rational.
        let norm = other.try_mul(&other.conj())?;
        if norm.rational_part.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let numerator = self.try_mul(&other.conj())?;
        Ok(Self::normalized(
            numerator.rational_part / &norm.rational_part,
            numerator.radical_part / &norm.rational_part,
            numerator.radicand,
        ))
    }

    /// a + b√D ↦ a − b√D.
    pub fn conj(&self) -> Self {
        Self {
            rational_part: self.rational_part.clone(),
            radical_part: -&self.radical_part,
            radicand: self.radicand.clone(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self {
            radicand: self.radicand.clone(),
            ..Self::rational(Rational::one())
        };
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The rational value, if the radical part vanishes.
    pub fn rationalize(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.rational_part.clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }
}

/// The roots α = 1 + √(1+k) and β = 1 − √(1+k) of x² = 2x + k.
pub fn make_alpha_beta(k: &Rational) -> Result<(QuadraticElement, QuadraticElement)> {
    require_positive_k(k)?;
    let radicand = Rational::one() + k;
    let alpha = QuadraticElement::new(Rational::one(), Rational::one(), radicand.clone())?;
    let beta = QuadraticElement::new(Rational::one(), -Rational::one(), radicand)?;
    Ok((alpha, beta))
}

impl PartialEq for QuadraticElement {
    fn eq(&self, other: &Self) -> bool {
        self.rational_part == other.rational_part
            && self.radical_part == other.radical_part
            && (self.radical_part.is_zero() || self.radicand == other.radicand)
    }
}

impl fmt::Display for QuadraticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", format_rational(&self.rational_part))
        } else {
            write!(
                f,
                "{} + {}·√{}",
                format_rational(&self.rational_part),
                format_rational(&self.radical_part),
                format_rational(&self.radicand)
            )
        }
    }
}

// Operator impls panic on mismatched radicands; use the `try_*` methods
// where operands may come from different fields.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadraticElement> for &QuadraticElement {
            type Output = QuadraticElement;
            fn $method(self, rhs: &QuadraticElement) -> QuadraticElement {
                self.$checked(rhs)
                    .expect("quadratic operands from different fields")
            }
        }
        impl $trait for QuadraticElement {
            type Output = QuadraticElement;
            fn $method(self, rhs: QuadraticElement) -> QuadraticElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for QuadraticElement {
    type Output = QuadraticElement;
    fn neg(self) -> QuadraticElement {
        Self {
            rational_part: -self.rational_part,
            radical_part: -self.radical_part,
            ..self
        }
    }
}

impl Zero for QuadraticElement {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.radical_part.is_zero()
    }
}

impl One for QuadraticElement {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Scalar for QuadraticElement {
    fn try_div(&self, rhs: &Self) -> Result<Self> {
        QuadraticElement::try_div(self, rhs)
    }

    fn from_rational(value: &Rational) -> Self {
        Self::rational(value.clone())
    }
}
