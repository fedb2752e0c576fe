//! Dual-complex k-Pell quaternions Q = Sₙ + i·Sₙ₊₁ + ε·Sₙ₊₂ + iε·Sₙ₊₃ and
//! their Binet form.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::dual_complex::DualComplex;
use crate::error::{Error, Result};
use crate::quadratic::{make_alpha_beta, QuadraticElement};
use crate::scalar::{format_rational, int, require_positive_k, Rational};
use crate::sequence::{dc_number, SequenceFamily};

/// A quaternion together with the sequence position it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DCKPellQuaternion {
    value: DualComplex<Rational>,
    family: SequenceFamily,
    k: Rational,
    n: i64,
}

pub fn build_quaternion(family: SequenceFamily, k: &Rational, n: i64) -> Result<DCKPellQuaternion> {
    Ok(DCKPellQuaternion {
        value: dc_number(family, k, n)?,
        family,
        k: k.clone(),
        n,
    })
}

impl DCKPellQuaternion {
    pub fn value(&self) -> &DualComplex<Rational> {
        &self.value
    }

    pub fn into_value(self) -> DualComplex<Rational> {
        self.value
    }

    pub fn family(&self) -> SequenceFamily {
        self.family
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    pub fn index(&self) -> i64 {
        self.n
    }

    pub fn scalar_part(&self) -> Rational {
        self.value.c1.clone()
    }

    pub fn vector_part(&self) -> DualComplex<Rational> {
        DualComplex {
            c1: Rational::zero(),
            ..self.value.clone()
        }
    }

    /// Rebuilds the value from the recorded provenance.
    pub fn rebuild(&self) -> Result<Self> {
        build_quaternion(self.family, &self.k, self.n)
    }
}

impl Add for &DCKPellQuaternion {
    type Output = DualComplex<Rational>;
    fn add(self, rhs: Self) -> DualComplex<Rational> {
        &self.value + &rhs.value
    }
}

impl Sub for &DCKPellQuaternion {
    type Output = DualComplex<Rational>;
    fn sub(self, rhs: Self) -> DualComplex<Rational> {
        &self.value - &rhs.value
    }
}

impl Mul for &DCKPellQuaternion {
    type Output = DualComplex<Rational>;
    fn mul(self, rhs: Self) -> DualComplex<Rational> {
        &self.value * &rhs.value
    }
}

/// α̂ = 1 + iα + εα² + iεα³ and the matching β̂.
#[derive(Clone, Debug, PartialEq)]
pub struct HatPair {
    pub hat_alpha: DualComplex<QuadraticElement>,
    pub hat_beta: DualComplex<QuadraticElement>,
    pub alpha: QuadraticElement,
    pub beta: QuadraticElement,
}

fn hat(root: &QuadraticElement) -> DualComplex<QuadraticElement> {
    DualComplex::new(
        QuadraticElement::one(),
        root.clone(),
        root.pow(2),
        root.pow(3),
    )
}

impl HatPair {
    pub fn new(k: &Rational) -> Result<Self> {
        let (alpha, beta) = make_alpha_beta(k)?;
        Ok(Self {
            hat_alpha: hat(&alpha),
            hat_beta: hat(&beta),
            alpha,
            beta,
        })
    }
}

fn rationalize_dc(
    value: &DualComplex<QuadraticElement>,
    context: &str,
) -> Result<DualComplex<Rational>> {
    value.try_map(|c| {
        c.rationalize()
            .map_err(|e| Error::Internal(format!("{context}: {e}")))
    })
}

/// Q_Pₖ,ₙ = (α̂αⁿ − β̂βⁿ)/(α − β), evaluated over ℚ(√(1+k)).
pub fn binet_quaternion(k: &Rational, n: u64) -> Result<DualComplex<Rational>> {
    let hats = HatPair::new(k)?;
    let scale = QuadraticElement::one().try_div(&(&hats.alpha - &hats.beta))?;
    let value = (hats.hat_alpha.scale(&hats.alpha.pow(n)) - hats.hat_beta.scale(&hats.beta.pow(n)))
        .scale(&scale);
    rationalize_dc(
        &value,
        &format!("Binet quaternion k={}, n={n}", format_rational(k)),
    )
}

/// The product α̂β̂ = (1+k) + 2i + (2k²+6k+4)ε + (4k+8)iε.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaCoefficient {
    value: DualComplex<Rational>,
}

impl GammaCoefficient {
    /// The closed polynomial form, without touching α or β.
    pub fn closed_form(k: &Rational) -> DualComplex<Rational> {
        let k2 = k * k;
        DualComplex::new(
            Rational::one() + k,
            int(2),
            int(2) * &k2 + int(6) * k + int(4),
            int(4) * k + int(8),
        )
    }

    pub fn value(&self) -> &DualComplex<Rational> {
        &self.value
    }
}

/// Computes α̂β̂ in the quadratic-scalar algebra and checks it against the
/// closed polynomial before returning it.
pub fn gamma_coefficient(k: &Rational) -> Result<GammaCoefficient> {
    require_positive_k(k)?;
    let hats = HatPair::new(k)?;
    let product = rationalize_dc(&(&hats.hat_alpha * &hats.hat_beta), "hat product")?;
    let closed = GammaCoefficient::closed_form(k);
    if product != closed {
        return Err(Error::Internal(format!(
            "hat product {product} differs from closed form {closed} at k={}",
            format_rational(k)
        )));
    }
    Ok(GammaCoefficient { value: product })
}
