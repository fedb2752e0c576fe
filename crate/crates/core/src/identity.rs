//! Catalog of identities over k-Pell numbers and quaternions, each with a
//! left-hand side built from raw algebra and a right-hand side built from
//! the claimed closed form. The two paths share no simplification, so an
//! inequality points at the claim rather than at a common bug.
//!
//! Scalar identities are embedded as dual-complex values with zero
//! non-scalar coefficients.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::dual_complex::{ConjugationKind, DualComplex};
use crate::error::{Error, Result};
use crate::quaternion::{binet_quaternion, build_quaternion, GammaCoefficient};
use crate::scalar::{int, parity_sign, pow_signed, require_positive_k, Rational, Scalar};
use crate::sequence::{
    pell_window, seq_binet, seq_prefix_sum, seq_term, SequenceFamily, SequenceSpec,
};

type Dc = DualComplex<Rational>;

/// The parameters an identity may quantify over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    K,
    N,
    M,
    R,
}

impl Param {
    pub fn symbol(self) -> char {
        match self {
            Param::K => 'k',
            Param::N => 'n',
            Param::M => 'm',
            Param::R => 'r',
        }
    }
}

const KN: &[Param] = &[Param::K, Param::N];
const KNM: &[Param] = &[Param::K, Param::N, Param::M];
const KNR: &[Param] = &[Param::K, Param::N, Param::R];

macro_rules! identities {
    ($($variant:ident => $tag:literal, $params:expr;)*) => {
        /// Every cataloged identity. Simplified and unsimplified variants of
        /// the same relation are separate entries.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $($variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn tag(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $tag,)*
                }
            }

            /// Parameters this identity quantifies over, in enumeration order.
            pub fn params(self) -> &'static [Param] {
                match self {
                    $(IdentityId::$variant => $params,)*
                }
            }
        }
    };
}

identities! {
    F12s => "f12s", KN;
    F12raw => "f12raw", KN;
    F13 => "f13", KN;
    F14 => "f14", KN;
    F14Kernel => "f14kernel", KN;
    F15 => "f15", KN;
    F16 => "f16", KN;
    F17 => "f17", KN;
    F18 => "f18", KN;
    F19 => "f19", KN;
    F20 => "f20", KN;
    F21 => "f21", KN;
    F22s => "f22s", KN;
    F23 => "f23", KN;
    F24 => "f24", KN;
    F25 => "f25", KN;
    F26 => "f26", KN;
    F27 => "f27", KN;
    F28 => "f28", KN;
    F29 => "f29", KN;
    F30 => "f30", KN;
    F31 => "f31", KN;
    G9 => "g9", KN;
    G10 => "g10", KN;
    G11 => "g11", KN;
    G12 => "g12", KN;
    G13 => "g13", KNM;
    G14 => "g14", KN;
    G17 => "g17", KNM;
    G18 => "g18", KN;
    G19Stated => "g19stated", KNR;
    G19Proof => "g19proof", KNR;
    HelperHonsberger => "helper_honsberger", KNM;
    HelperDOcagne => "helper_docagne", KNM;
    HelperCassini => "helper_cassini", KN;
    RingAxioms => "ring_axioms", KNM;
    DivRoundtrip => "div_roundtrip", KNM;
    BinetNumber => "binet_number", KN;
    BinetQuaternion => "binet_quaternion", KN;
    PrefixSum => "prefix_sum", KN;
}

impl IdentityId {
    pub fn takes(self, param: Param) -> bool {
        self.params().contains(&param)
    }

    /// Range restriction beyond k > 0, if any.
    fn range_violation(self, b: &Bindings) -> Option<String> {
        let n = b.n.unwrap_or(0);
        let m = b.m.unwrap_or(0);
        let r = b.r.unwrap_or(0);
        match self {
            IdentityId::G13 if n < 0 || m < 0 => Some("requires n, m >= 0".into()),
            IdentityId::G18 | IdentityId::HelperCassini if n < 1 => Some("requires n >= 1".into()),
            IdentityId::G19Stated | IdentityId::G19Proof if !(1 <= r && r <= n) => {
                Some("requires 1 <= r <= n".into())
            }
            IdentityId::G14
            | IdentityId::BinetNumber
            | IdentityId::BinetQuaternion
            | IdentityId::PrefixSum
                if n < 0 =>
            {
                Some("requires n >= 0".into())
            }
            _ => None,
        }
    }

    /// Whether fully-typed bindings fall inside this identity's range.
    pub fn admits(self, b: &Bindings) -> bool {
        self.range_violation(b).is_none() && b.k.as_ref().is_some_and(|k| k > &Rational::zero())
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_lowercase().replace('-', "_");
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.tag() == wanted)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for IdentityId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let tag = String::deserialize(d)?;
        tag.parse().map_err(serde::de::Error::custom)
    }
}

/// Values for the quantified parameters of one identity instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bindings {
    pub k: Option<Rational>,
    pub n: Option<i64>,
    pub m: Option<i64>,
    pub r: Option<i64>,
}

impl Bindings {
    pub fn kn(k: Rational, n: i64) -> Self {
        Self {
            k: Some(k),
            n: Some(n),
            ..Self::default()
        }
    }

    pub fn knm(k: Rational, n: i64, m: i64) -> Self {
        Self {
            m: Some(m),
            ..Self::kn(k, n)
        }
    }

    pub fn knr(k: Rational, n: i64, r: i64) -> Self {
        Self {
            r: Some(r),
            ..Self::kn(k, n)
        }
    }

    fn has(&self, param: Param) -> bool {
        match param {
            Param::K => self.k.is_some(),
            Param::N => self.n.is_some(),
            Param::M => self.m.is_some(),
            Param::R => self.r.is_some(),
        }
    }

    /// Checks that exactly the identity's parameters are bound and in range.
    pub fn validate(&self, id: IdentityId) -> Result<()> {
        for param in [Param::K, Param::N, Param::M, Param::R] {
            let wanted = id.takes(param);
            if wanted && !self.has(param) {
                return Err(Error::MissingBinding {
                    id: id.tag().into(),
                    param: param.symbol(),
                });
            }
            if !wanted && self.has(param) {
                return Err(Error::UnexpectedBinding {
                    id: id.tag().into(),
                    param: param.symbol(),
                });
            }
        }
        require_positive_k(self.k.as_ref().expect("every identity binds k"))?;
        match id.range_violation(self) {
            Some(reason) => Err(Error::OutOfRange {
                id: id.tag().into(),
                reason,
            }),
            None => Ok(()),
        }
    }
}

/// Closed-form side helper: k-Pell terms over a precomputed window.
struct Terms {
    k: Rational,
    lo: i64,
    values: Vec<Rational>,
}

impl Terms {
    fn covering(k: &Rational, b: &Bindings) -> Self {
        let n = b.n.unwrap_or(0);
        let m = b.m.unwrap_or(0);
        let r = b.r.unwrap_or(0);
        let lo = [0, n, m, n - r, m - n].into_iter().min().unwrap() - 4;
        let hi = [2 * n, n + m, n + r, m].into_iter().max().unwrap() + 8;
        let values = pell_window(k, lo, (hi - lo + 1) as usize);
        Self {
            k: k.clone(),
            lo,
            values,
        }
    }

    fn p(&self, i: i64) -> Rational {
        let offset = i - self.lo;
        if offset >= 0 && (offset as usize) < self.values.len() {
            self.values[offset as usize].clone()
        } else {
            seq_term(
                &SequenceSpec::new(SequenceFamily::KPell, self.k.clone()).unwrap(),
                i,
            )
        }
    }

    /// Pᵢ + i·Pᵢ₊₁ + ε·Pᵢ₊₂ + iε·Pᵢ₊₃ assembled from the table.
    fn q(&self, i: i64) -> Dc {
        Dc::new(self.p(i), self.p(i + 1), self.p(i + 2), self.p(i + 3))
    }

    /// (−1)^sign_exp · k^k_exp
    fn signed_k_power(&self, sign_exp: i64, k_exp: i64) -> Result<Rational> {
        Ok(parity_sign(sign_exp) * pow_signed(&self.k, k_exp)?)
    }
}

fn dc(a: Rational, b: Rational, c: Rational, d: Rational) -> Dc {
    Dc::new(a, b, c, d)
}

fn scalar(value: Rational) -> Dc {
    Dc::from_scalar(value)
}

/// Raw quaternion Q_Pₖ,ᵢ from the sequence layer.
fn quat(k: &Rational, i: i64) -> Result<Dc> {
    Ok(build_quaternion(SequenceFamily::KPell, k, i)?.into_value())
}

fn dc_of(family: SequenceFamily, k: &Rational, i: i64) -> Result<Dc> {
    crate::sequence::dc_number(family, k, i)
}

fn two() -> Rational {
    int(2)
}

/// Evaluates both sides of `id` at `bindings`.
pub fn identity_sides(id: IdentityId, bindings: &Bindings) -> Result<(Dc, Dc)> {
    bindings.validate(id)?;
    let k = bindings.k.clone().expect("validated");
    let n = bindings.n.unwrap_or(0);
    let m = bindings.m.unwrap_or(0);
    let r = bindings.r.unwrap_or(0);
    let t = Terms::covering(&k, bindings);
    let p = |i: i64| t.p(i);
    let sum_sq = || p(n) * p(n) + p(n + 1) * p(n + 1);
    let gamma = GammaCoefficient::closed_form(&k);
    let zero = Rational::zero;
    use ConjugationKind::*;
    use IdentityId::*;

    Ok(match id {
        F12s | F12raw | F22s => {
            let q = quat(&k, n)?;
            let lhs = if id == F22s {
                q.norm_product(C1)?
            } else {
                &q * &q.conj(C1)?
            };
            let cross = if id == F12raw {
                p(n) * p(n + 2) + p(n + 1) * p(n + 3)
            } else {
                p(2 * n + 3)
            };
            (lhs, dc(sum_sq(), zero(), two() * cross, zero()))
        }
        F13 | F23 => {
            let q = quat(&k, n)?;
            let lhs = if id == F23 {
                q.norm_product(C2)?
            } else {
                &q * &q.conj(C2)?
            };
            (
                lhs,
                dc(
                    p(n) * p(n) - p(n + 1) * p(n + 1),
                    two() * p(n) * p(n + 1),
                    zero(),
                    zero(),
                ),
            )
        }
        F14 | F24 => {
            let q = quat(&k, n)?;
            let lhs = if id == F24 {
                q.norm_product(C3)?
            } else {
                &q * &q.conj(C3)?
            };
            let tail = int(-4) * t.signed_k_power(n, n)?;
            (lhs, dc(sum_sq(), zero(), zero(), tail))
        }
        F14Kernel => (
            scalar(p(n) * p(n + 3) - p(n + 1) * p(n + 2)),
            scalar(int(-2) * t.signed_k_power(n, n)?),
        ),
        F15 | F25 => {
            let q = quat(&k, n)?;
            let lhs = if id == F25 {
                q.norm_product(C4)?
            } else {
                &q * &q.conj(C4)?
            };
            (lhs, scalar(sum_sq()))
        }
        F16 => {
            let q = quat(&k, n)?;
            (
                &q + &q.conj(C1)?,
                dc(two() * p(n), zero(), two() * p(n + 2), zero()),
            )
        }
        F17 => {
            let q = quat(&k, n)?;
            (
                &q + &q.conj(C2)?,
                dc(two() * p(n), two() * p(n + 1), zero(), zero()),
            )
        }
        F18 => {
            let q = quat(&k, n)?;
            (
                &q + &q.conj(C3)?,
                dc(two() * p(n), zero(), zero(), two() * p(n + 3)),
            )
        }
        F19 => {
            // (Pₙ + iPₙ₊₁)·Q*⁴ against (Pₙ − iPₙ₊₁)·Q*²
            let q = quat(&k, n)?;
            let z1 = Dc::from_parts(q.complex_part(), (zero(), zero()));
            let z1_star = z1.conj(C1)?;
            (&z1 * &q.conj(C4)?, &z1_star * &q.conj(C2)?)
        }
        F20 => {
            let q = quat(&k, n)?;
            (
                &(&Dc::eps() * &q) + &q.conj(C5)?,
                dc(p(n + 2), p(n + 3), zero(), zero()),
            )
        }
        F21 => {
            let q = quat(&k, n)?;
            (
                &q - &(&Dc::eps() * &q.conj(C5)?),
                dc(p(n), p(n + 1), zero(), zero()),
            )
        }
        F26 | F27 => {
            let family = if id == F26 {
                SequenceFamily::KPell
            } else {
                SequenceFamily::KPellLucas
            };
            let lhs = dc_of(family, &k, n + 2)?;
            let rhs = dc_of(family, &k, n + 1)?.scale(&two()) + dc_of(family, &k, n)?.scale(&k);
            (lhs, rhs)
        }
        F28 => (
            dc_of(SequenceFamily::ModifiedKPell, &k, n)?,
            t.q(n) + t.q(n - 1).scale(&k),
        ),
        F29 => (
            dc_of(SequenceFamily::ModifiedKPell, &k, n)?,
            t.q(n + 1) - t.q(n),
        ),
        F30 => (
            dc_of(SequenceFamily::KPellLucas, &k, n)?,
            (t.q(n + 1) - t.q(n)).scale(&two()),
        ),
        F31 => (
            dc_of(SequenceFamily::KPellLucas, &k, n + 1)?,
            (t.q(n + 1) + t.q(n)).scale(&two()),
        ),
        G9 => (
            quat(&k, n + 1)?.scale(&two()) + quat(&k, n)?.scale(&k),
            t.q(n + 2),
        ),
        G10 => {
            let (a, b) = (quat(&k, n + 1)?, quat(&k, n)?);
            let lhs = &a * &a + (&b * &b).scale(&k);
            let s = 2 * n;
            let rhs = t.q(s + 1)
                + dc(
                    -p(s + 3),
                    p(s + 2),
                    p(s + 3) - two() * p(s + 5),
                    int(3) * p(s + 4),
                );
            (lhs, rhs)
        }
        G11 => {
            let (a, b) = (quat(&k, n + 1)?, quat(&k, n - 1)?);
            let lhs = &a * &a - (&b * &b).scale(&(&k * &k));
            let s = 2 * n;
            let bracket = dc(p(s + 2), -p(s + 1), p(s + 4), int(-3) * p(s + 3));
            (lhs, t.q(s).scale(&two()) - bracket.scale(&two()))
        }
        G12 => {
            let lhs = quat(&k, n)?
                - &Dc::i() * &quat(&k, n + 1)?.conj(C3)?
                - &Dc::eps() * &quat(&k, n + 2)?
                - &Dc::ieps() * &quat(&k, n + 3)?;
            (lhs, dc(p(n) - p(n + 2), zero(), two() * p(n + 4), zero()))
        }
        G13 => {
            let lhs =
                (&quat(&k, n - 1)? * &quat(&k, m)?).scale(&k) + &quat(&k, n)? * &quat(&k, m + 1)?;
            let s = n + m;
            let rhs = t.q(s)
                + dc(
                    -p(s + 2),
                    p(s + 1),
                    p(s + 2) - two() * p(s + 4),
                    int(3) * p(s + 3),
                );
            (lhs, rhs)
        }
        G14 => {
            let lhs = (0..=n).map(|s| quat(&k, s)).sum::<Result<Dc>>()?;
            let bracket = t.q(n + 1) + t.q(n).scale(&k) - t.q(1) + t.q(0);
            (
                lhs,
                bracket.scale(&Rational::one().try_div(&(&k + Rational::one()))?),
            )
        }
        G17 => {
            let lhs = &quat(&k, m)? * &quat(&k, n + 1)? - &quat(&k, m + 1)? * &quat(&k, n)?;
            (lhs, gamma.scale(&(t.signed_k_power(n, n)? * p(m - n))))
        }
        G18 => {
            let lhs = &quat(&k, n - 1)? * &quat(&k, n + 1)? - quat(&k, n)?.pow(2);
            (lhs, gamma.scale(&t.signed_k_power(n, n - 1)?))
        }
        G19Stated => {
            let lhs = quat(&k, n)?.pow(2) - &quat(&k, n + r)? * &quat(&k, n - r)?;
            let factor = pow_signed(&-k.clone(), n - r + 1)? * p(r) * p(r);
            (lhs, gamma.scale(&factor))
        }
        G19Proof => {
            let lhs = &quat(&k, n - r)? * &quat(&k, n + r)? - quat(&k, n)?.pow(2);
            let factor = t.signed_k_power(n - r + 1, n - r)? * p(r) * p(r);
            (lhs, gamma.scale(&factor))
        }
        HelperHonsberger => {
            let lhs = &k * seq_p(&k, n - 1) * seq_p(&k, m) + seq_p(&k, n) * seq_p(&k, m + 1);
            (scalar(lhs), scalar(p(n + m)))
        }
        HelperDOcagne => {
            let lhs = seq_p(&k, m) * seq_p(&k, n + 1) - seq_p(&k, m + 1) * seq_p(&k, n);
            (scalar(lhs), scalar(t.signed_k_power(n, n)? * p(m - n)))
        }
        HelperCassini => {
            let lhs = seq_p(&k, n - 1) * seq_p(&k, n + 1) - seq_p(&k, n) * seq_p(&k, n);
            (scalar(lhs), scalar(t.signed_k_power(n, n - 1)?))
        }
        RingAxioms => ring_axioms(&k, n, m)?,
        DivRoundtrip => {
            let (a, b) = (quat(&k, n)?, quat(&k, m)?);
            (&a.try_div(&b)? * &b, a)
        }
        BinetNumber => (scalar(seq_binet(&k, n as u64)?), scalar(seq_p(&k, n))),
        BinetQuaternion => (binet_quaternion(&k, n as u64)?, quat(&k, n)?),
        PrefixSum => {
            let literal = (0..=n)
                .map(|i| seq_p(&k, i))
                .fold(Rational::zero(), |acc, x| acc + x);
            (scalar(literal), scalar(seq_prefix_sum(&k, n as u64)?))
        }
    })
}

fn seq_p(k: &Rational, i: i64) -> Rational {
    seq_term(
        &SequenceSpec::new(SequenceFamily::KPell, k.clone()).expect("k validated"),
        i,
    )
}

/// Commutativity, associativity, distributivity, unit and nilpotency on
/// a = Q_Pₙ, b = Q_Pₘ, c = Q_PLₙ₊ₘ. Reports the first violated law, or the
/// associativity pair when all laws hold.
fn ring_axioms(k: &Rational, n: i64, m: i64) -> Result<(Dc, Dc)> {
    let a = quat(k, n)?;
    let b = quat(k, m)?;
    let c = dc_of(SequenceFamily::KPellLucas, k, n + m)?;
    let nil = &Dc::eps() * &c;
    let laws = [
        (&(&a * &b) * &c, &a * &(&b * &c)),
        (&a * &b, &b * &a),
        (&a * &(&b + &c), &(&a * &b) + &(&a * &c)),
        (&Dc::one() * &a, a.clone()),
        (&nil * &nil, Dc::zero()),
    ];
    let first_failure = laws.iter().position(|(l, r)| l != r).unwrap_or(0);
    Ok(laws[first_failure].clone())
}
