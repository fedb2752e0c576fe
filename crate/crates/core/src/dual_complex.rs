//! The commutative dual-complex ring on the basis {1, i, ε, iε} with
//! i² = −1 and ε² = (iε)² = 0.
//!
//! A value is `z₁ + ε·z₂` with complex `z₁ = c1 + i·ci` and
//! `z₂ = ce + i·cie`. Elements with `z₁ = 0` are zero divisors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DualComplex<T> {
    /// Coefficient of 1.
    pub c1: T,
    /// Coefficient of i.
    pub ci: T,
    /// Coefficient of ε.
    pub ce: T,
    /// Coefficient of iε.
    pub cie: T,
}

/// The five conjugations of a dual-complex number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConjugationKind {
    /// Complex conjugation: z₁* + ε z₂*.
    C1,
    /// Dual conjugation: z₁ − ε z₂.
    C2,
    /// Coupled conjugation: z₁* − ε z₂*.
    C3,
    /// Dual-complex conjugation: z₁*(1 − ε z₂/z₁).
    C4,
    /// Anti-dual conjugation: z₂ − ε z₁.
    C5,
}

impl ConjugationKind {
    pub const ALL: [ConjugationKind; 5] = [Self::C1, Self::C2, Self::C3, Self::C4, Self::C5];
}

// Complex helpers on (re, im) pairs.
fn cmul<T: Scalar>(a: (&T, &T), b: (&T, &T)) -> (T, T) {
    (
        a.0.clone() * b.0.clone() - a.1.clone() * b.1.clone(),
        a.0.clone() * b.1.clone() + a.1.clone() * b.0.clone(),
    )
}

fn cdiv<T: Scalar>(a: (&T, &T), b: (&T, &T)) -> Result<(T, T)> {
    let norm = b.0.clone() * b.0.clone() + b.1.clone() * b.1.clone();
    let (re, im) = cmul(a, (b.0, &-b.1.clone()));
    Ok((re.try_div(&norm)?, im.try_div(&norm)?))
}

impl<T> DualComplex<T> {
    pub const fn new(c1: T, ci: T, ce: T, cie: T) -> Self {
        Self { c1, ci, ce, cie }
    }

    /// Coefficients in basis order (1, i, ε, iε).
    pub fn coefficients(&self) -> [&T; 4] {
        [&self.c1, &self.ci, &self.ce, &self.cie]
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> DualComplex<U> {
        DualComplex::new(f(&self.c1), f(&self.ci), f(&self.ce), f(&self.cie))
    }

    pub fn try_map<U>(&self, mut f: impl FnMut(&T) -> Result<U>) -> Result<DualComplex<U>> {
        Ok(DualComplex::new(
            f(&self.c1)?,
            f(&self.ci)?,
            f(&self.ce)?,
            f(&self.cie)?,
        ))
    }
}

impl<T: Scalar> DualComplex<T> {
    pub fn from_scalar(value: T) -> Self {
        Self::new(value, T::zero(), T::zero(), T::zero())
    }

    /// `z₁ + ε z₂` from complex parts given as (re, im).
    pub fn from_parts(z1: (T, T), z2: (T, T)) -> Self {
        Self::new(z1.0, z1.1, z2.0, z2.1)
    }

    pub fn from_rationals(coefficients: [&Rational; 4]) -> Self {
        let [a, b, c, d] = coefficients;
        Self::new(
            T::from_rational(a),
            T::from_rational(b),
            T::from_rational(c),
            T::from_rational(d),
        )
    }

    pub fn i() -> Self {
        Self::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn eps() -> Self {
        Self::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn ieps() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    /// z₁ as (re, im).
    pub fn complex_part(&self) -> (T, T) {
        (self.c1.clone(), self.ci.clone())
    }

    /// z₂ as (re, im).
    pub fn dual_part(&self) -> (T, T) {
        (self.ce.clone(), self.cie.clone())
    }

    pub fn has_invertible_complex_part(&self) -> bool {
        !(self.c1.is_zero() && self.ci.is_zero())
    }

    pub fn scale(&self, lambda: &T) -> Self {
        self.map(|c| lambda.clone() * c.clone())
    }

    /// `self / divisor`, defined when the divisor's complex part z₃ is
    /// nonzero: z₁/z₃ + ε (z₂z₃ − z₁z₄)/z₃².
    pub fn try_div(&self, divisor: &Self) -> Result<Self> {
        if !divisor.has_invertible_complex_part() {
            return Err(Error::NonInvertible);
        }
        let z3 = (&divisor.c1, &divisor.ci);
        let z4 = (&divisor.ce, &divisor.cie);
        let z1 = (&self.c1, &self.ci);
        let z2 = (&self.ce, &self.cie);
        let front = cdiv(z1, z3)?;
        let (a, b) = cmul(z2, z3);
        let (c, d) = cmul(z1, z4);
        let numer = (a - c, b - d);
        let z3_sq = cmul(z3, z3);
        let back = cdiv((&numer.0, &numer.1), (&z3_sq.0, &z3_sq.1))?;
        Ok(Self::from_parts(front, back))
    }

    pub fn conj(&self, kind: ConjugationKind) -> Result<Self> {
        let Self { c1, ci, ce, cie } = self.clone();
        Ok(match kind {
            ConjugationKind::C1 => Self::new(c1, -ci, ce, -cie),
            ConjugationKind::C2 => Self::new(c1, ci, -ce, -cie),
            ConjugationKind::C3 => Self::new(c1, -ci, -ce, cie),
            ConjugationKind::C4 => {
                if !self.has_invertible_complex_part() {
                    return Err(Error::NonInvertible);
                }
                // z₁* − ε z₁* (z₂ / z₁)
                let ratio = cdiv((&ce, &cie), (&c1, &ci))?;
                let z1_star = (c1.clone(), -ci.clone());
                let shift = cmul((&z1_star.0, &z1_star.1), (&ratio.0, &ratio.1));
                Self::new(z1_star.0, z1_star.1, -shift.0, -shift.1)
            }
            ConjugationKind::C5 => Self::new(ce, cie, -c1, -ci),
        })
    }

    /// The exact product `w · w^{*kind}`; the norm is its square root.
    pub fn norm_product(&self, kind: ConjugationKind) -> Result<Self> {
        Ok(self.clone() * self.conj(kind)?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| acc * self.clone())
    }
}

impl<T: Scalar> Add for DualComplex<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.c1 + rhs.c1,
            self.ci + rhs.ci,
            self.ce + rhs.ce,
            self.cie + rhs.cie,
        )
    }
}

impl<T: Scalar> Sub for DualComplex<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.c1 - rhs.c1,
            self.ci - rhs.ci,
            self.ce - rhs.ce,
            self.cie - rhs.cie,
        )
    }
}

impl<T: Scalar> Neg for DualComplex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.c1, -self.ci, -self.ce, -self.cie)
    }
}

impl<T: Scalar> Mul for DualComplex<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (a1, a2, a3, a4) = (self.c1, self.ci, self.ce, self.cie);
        let (b1, b2, b3, b4) = (rhs.c1, rhs.ci, rhs.ce, rhs.cie);
        Self::new(
            a1.clone() * b1.clone() - a2.clone() * b2.clone(),
            a1.clone() * b2.clone() + a2.clone() * b1.clone(),
            a1.clone() * b3.clone() + a3.clone() * b1.clone()
                - a2.clone() * b4.clone()
                - a4.clone() * b2.clone(),
            a1 * b4 + a4 * b1 + a2 * b3 + a3 * b2,
        )
    }
}

impl<T: Scalar> Add for &DualComplex<T> {
    type Output = DualComplex<T>;
    fn add(self, rhs: Self) -> DualComplex<T> {
        self.clone() + rhs.clone()
    }
}

impl<T: Scalar> Sub for &DualComplex<T> {
    type Output = DualComplex<T>;
    fn sub(self, rhs: Self) -> DualComplex<T> {
        self.clone() - rhs.clone()
    }
}

impl<T: Scalar> Mul for &DualComplex<T> {
    type Output = DualComplex<T>;
    fn mul(self, rhs: Self) -> DualComplex<T> {
        self.clone() * rhs.clone()
    }
}

impl<T: Scalar> Zero for DualComplex<T> {
    fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    fn is_zero(&self) -> bool {
        self.coefficients().iter().all(|c| c.is_zero())
    }
}

impl<T: Scalar> One for DualComplex<T> {
    fn one() -> Self {
        Self::from_scalar(T::one())
    }
}

impl<T: Scalar> std::iter::Sum for DualComplex<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl DualComplex<Rational> {
    /// Parses the plain rendering `"a + b·i + c·eps + d·i·eps"`.
    pub fn parse_plain(text: &str) -> Result<Self> {
        let bad = || Error::ParseDualComplex(text.to_string());
        let parts: Vec<&str> = text.split(" + ").collect();
        let [a, b, c, d] = parts.as_slice() else {
            return Err(bad());
        };
        let b = b.strip_suffix("·i").ok_or_else(bad)?;
        let d = d.strip_suffix("·i·eps").ok_or_else(bad)?;
        let c = c.strip_suffix("·eps").ok_or_else(bad)?;
        Ok(Self::new(
            parse_rational(a)?,
            parse_rational(b)?,
            parse_rational(c)?,
            parse_rational(d)?,
        ))
    }
}

impl fmt::Display for DualComplex<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}·i + {}·eps + {}·i·eps",
            format_rational(&self.c1),
            format_rational(&self.ci),
            format_rational(&self.ce),
            format_rational(&self.cie)
        )
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DualComplexText {
    one: String,
    i: String,
    eps: String,
    ieps: String,
}

impl Serialize for DualComplex<Rational> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DualComplexText {
            one: format_rational(&self.c1),
            i: format_rational(&self.ci),
            eps: format_rational(&self.ce),
            ieps: format_rational(&self.cie),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DualComplex<Rational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = DualComplexText::deserialize(deserializer)?;
        let parse = |s: &str| parse_rational(s).map_err(D::Error::custom);
        Ok(Self::new(
            parse(&text.one)?,
            parse(&text.i)?,
            parse(&text.eps)?,
            parse(&text.ieps)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn dc(a: i64, b: i64, c: i64, d: i64) -> DualComplex<Rational> {
        DualComplex::new(int(a), int(b), int(c), int(d))
    }

    #[test]
    fn addition_and_subtraction() {
        assert_eq!(dc(1, 2, 3, 4) + dc(1, 1, 1, 1), dc(2, 3, 4, 5));
        assert_eq!(dc(1, 2, 3, 4) + DualComplex::zero(), dc(1, 2, 3, 4));
        assert!((dc(1, 2, 3, 4) - dc(1, 2, 3, 4)).is_zero());
    }

    #[test]
    fn basis_products() {
        let i = DualComplex::<Rational>::i();
        let e = DualComplex::<Rational>::eps();
        let ie = DualComplex::<Rational>::ieps();
        assert_eq!(&i * &i, -DualComplex::one());
        assert!((&e * &e).is_zero());
        assert!((&ie * &ie).is_zero());
        assert_eq!(&i * &e, ie.clone());
        assert_eq!(&i * &ie, -e.clone());
    }

    #[test]
    fn square_expansion() {
        let w = dc(1, 2, 5, 12);
        assert_eq!(&w * &w, dc(-3, 4, -38, 44));
    }

    #[test]
    fn division() {
        let w = dc(1, 2, 3, 4);
        assert_eq!(w.try_div(&w).unwrap(), DualComplex::one());
        let q = DualComplex::<Rational>::eps()
            .try_div(&dc(1, 1, 0, 0))
            .unwrap();
        assert_eq!(
            q,
            DualComplex::new(int(0), int(0), ratio(1, 2), ratio(-1, 2))
        );
        assert_eq!(w.try_div(&DualComplex::eps()), Err(Error::NonInvertible));
    }

    #[test]
    fn scaling() {
        assert_eq!(dc(1, 1, 0, 0).scale(&int(2)), dc(2, 2, 0, 0));
        assert!(dc(1, 2, 3, 4).scale(&int(0)).is_zero());
    }

    #[test]
    fn conjugations() {
        let w = dc(1, 2, 3, 4);
        assert_eq!(w.conj(ConjugationKind::C1).unwrap(), dc(1, -2, 3, -4));
        assert_eq!(w.conj(ConjugationKind::C2).unwrap(), dc(1, 2, -3, -4));
        assert_eq!(w.conj(ConjugationKind::C3).unwrap(), dc(1, -2, -3, 4));
        assert_eq!(w.conj(ConjugationKind::C5).unwrap(), dc(3, 4, -1, -2));
        assert_eq!(
            dc(0, 0, 1, 1).conj(ConjugationKind::C4),
            Err(Error::NonInvertible)
        );
    }

    #[test]
    fn norm_products() {
        let w = dc(1, 2, 3, 4);
        assert_eq!(
            w.norm_product(ConjugationKind::C2).unwrap(),
            dc(-3, 4, 0, 0)
        );
        assert_eq!(
            dc(1, 2, 7, -9).norm_product(ConjugationKind::C2).unwrap(),
            dc(-3, 4, 0, 0)
        );
        assert_eq!(w.norm_product(ConjugationKind::C4).unwrap(), dc(5, 0, 0, 0));
        assert_eq!(
            dc(1, 1, 0, 0).norm_product(ConjugationKind::C1).unwrap(),
            dc(2, 0, 0, 0)
        );
        // |z₁|² + 2ε Re(z₁ z₂*): Re((1+2i)(3−4i)) = 11
        assert_eq!(
            w.norm_product(ConjugationKind::C1).unwrap(),
            dc(5, 0, 22, 0)
        );
    }

    #[test]
    fn text_and_json_forms() {
        let w = DualComplex::new(int(0), ratio(-1, 2), int(2), int(5));
        let plain = w.to_string();
        assert_eq!(plain, "0 + -1/2·i + 2·eps + 5·i·eps");
        assert_eq!(DualComplex::parse_plain(&plain).unwrap(), w);
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"one":"0","i":"-1/2","eps":"2","ieps":"5"}"#);
        assert_eq!(
            serde_json::from_str::<DualComplex<Rational>>(&json).unwrap(),
            w
        );
        assert!(serde_json::from_str::<DualComplex<Rational>>(
            r#"{"one":"1/0","i":"0","eps":"0","ieps":"0"}"#
        )
        .is_err());
    }

    #[test]
    fn float_instantiation() {
        let w = DualComplex::new(1.0f64, 2.0, 3.0, 4.0);
        let q = w.try_div(&w).unwrap();
        assert!((q.c1 - 1.0).abs() < 1e-12 && q.ci.abs() < 1e-12);
    }
}
