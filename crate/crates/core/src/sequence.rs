//! The k-Pell family: P (k-Pell), PL (k-Pell-Lucas) and MP (modified
//! k-Pell), all satisfying Sₙ₊₂ = 2Sₙ₊₁ + k·Sₙ.
//!
//! P is the primary sequence with P₀ = 0, P₁ = 1. The companions are
//! defined through it: PLₙ = 2(Pₙ₊₁ − Pₙ) and MPₙ = Pₙ₊₁ − Pₙ.
//! Negative indices follow the backward recurrence Pₙ₋₂ = (Pₙ − 2Pₙ₋₁)/k.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::dual_complex::DualComplex;
use crate::error::{Error, Result};
use crate::quadratic::make_alpha_beta;
use crate::scalar::{int, require_positive_k, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceFamily {
    KPell,
    KPellLucas,
    ModifiedKPell,
}

impl SequenceFamily {
    pub const ALL: [SequenceFamily; 3] = [Self::KPell, Self::KPellLucas, Self::ModifiedKPell];

    pub fn tag(self) -> &'static str {
        match self {
            Self::KPell => "pell",
            Self::KPellLucas => "pell-lucas",
            Self::ModifiedKPell => "modified-pell",
        }
    }

    /// Value of this family at `n`, given Pₙ and Pₙ₊₁.
    fn term_from_pell_pair(self, p_n: &Rational, p_next: &Rational) -> Rational {
        match self {
            Self::KPell => p_n.clone(),
            Self::KPellLucas => int(2) * (p_next - p_n),
            Self::ModifiedKPell => p_next - p_n,
        }
    }
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SequenceFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pell" | "p" | "k-pell" => Ok(Self::KPell),
            "pell-lucas" | "pl" | "k-pell-lucas" => Ok(Self::KPellLucas),
            "modified-pell" | "mp" | "modified-k-pell" => Ok(Self::ModifiedKPell),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// A sequence family together with its (positive) parameter k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceSpec {
    family: SequenceFamily,
    k: Rational,
}

impl SequenceSpec {
    pub fn new(family: SequenceFamily, k: Rational) -> Result<Self> {
        require_positive_k(&k)?;
        Ok(Self { family, k })
    }

    pub fn family(&self) -> SequenceFamily {
        self.family
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    /// Consecutive terms Sₛₜₐᵣₜ, …, Sₛₜₐᵣₜ₊ₗₑₙ₋₁.
    pub fn window(&self, start: i64, len: usize) -> Vec<Rational> {
        let pell = pell_window(&self.k, start, len + 1);
        pell.windows(2)
            .map(|w| self.family.term_from_pell_pair(&w[0], &w[1]))
            .collect()
    }
}

/// Nonnegative indices below this bound are served from a per-k table.
const TABLE_LIMIT: usize = 1 << 13;

type PellTables = HashMap<Rational, Arc<Vec<Rational>>>;

/// P₀ … Pₗₑₙ₋₁ for `k`, grown on demand. The table holds exactly what the
/// forward recurrence produces, so callers cannot observe it.
fn pell_prefix(k: &Rational, len: usize) -> Arc<Vec<Rational>> {
    static TABLES: OnceLock<Mutex<PellTables>> = OnceLock::new();
    let mut tables = TABLES
        .get_or_init(Default::default)
        .lock()
        .unwrap_or_else(|e| e.into_inner());
    let table = tables
        .entry(k.clone())
        .or_insert_with(|| Arc::new(vec![Rational::zero(), Rational::one()]));
    if table.len() < len {
        let terms = Arc::make_mut(table);
        while terms.len() < len {
            let n = terms.len();
            let next = int(2) * &terms[n - 1] + k * &terms[n - 2];
            terms.push(next);
        }
    }
    Arc::clone(table)
}

/// Pₛₜₐᵣₜ … Pₛₜₐᵣₜ₊ₗₑₙ₋₁. `k` must be positive.
pub(crate) fn pell_window(k: &Rational, start: i64, len: usize) -> Vec<Rational> {
    if start >= 0 && start as usize + len <= TABLE_LIMIT {
        let table = pell_prefix(k, start as usize + len);
        return table[start as usize..start as usize + len].to_vec();
    }
    let (mut prev, mut cur) = pell_pair(k, start);
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let next = int(2) * &cur + k * &prev;
        out.push(prev);
        prev = cur;
        cur = next;
    }
    out
}

/// (Pₙ, Pₙ₊₁) by forward or backward iteration from (P₀, P₁).
fn pell_pair(k: &Rational, n: i64) -> (Rational, Rational) {
    if n >= 0 && (n as usize) + 2 <= TABLE_LIMIT {
        let table = pell_prefix(k, n as usize + 2);
        return (table[n as usize].clone(), table[n as usize + 1].clone());
    }
    let (mut lo, mut hi) = (Rational::zero(), Rational::one());
    if n >= 0 {
        for _ in 0..n {
            let next = int(2) * &hi + k * &lo;
            lo = std::mem::replace(&mut hi, next);
        }
    } else {
        for _ in 0..n.unsigned_abs() {
            let before = (&hi - int(2) * &lo) / k;
            hi = std::mem::replace(&mut lo, before);
        }
    }
    (lo, hi)
}

/// Sₙ for any integer `n`.
pub fn seq_term(spec: &SequenceSpec, n: i64) -> Rational {
    let (p_n, p_next) = pell_pair(&spec.k, n);
    spec.family.term_from_pell_pair(&p_n, &p_next)
}

/// 2×2 matrix over the rationals, row-major.
#[derive(Clone)]
struct Mat2([Rational; 4]);

impl Mat2 {
    fn mul(&self, rhs: &Mat2) -> Mat2 {
        let [a, b, c, d] = &self.0;
        let [e, f, g, h] = &rhs.0;
        Mat2([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }
}

/// Sₙ in O(log n) multiplications via powers of the companion matrix
/// [[2, k], [1, 0]], whose n-th power is [[Pₙ₊₁, kPₙ], [Pₙ, kPₙ₋₁]].
pub fn seq_term_fast(spec: &SequenceSpec, n: u64) -> Rational {
    let mut result = Mat2([
        Rational::one(),
        Rational::zero(),
        Rational::zero(),
        Rational::one(),
    ]);
    let mut base = Mat2([int(2), spec.k.clone(), Rational::one(), Rational::zero()]);
    let mut exp = n;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result.mul(&base);
        }
        exp >>= 1;
        if exp > 0 {
            base = base.mul(&base);
        }
    }
    let [p_next, _, p_n, _] = &result.0;
    spec.family.term_from_pell_pair(p_n, p_next)
}

/// Pₙ = (αⁿ − βⁿ)/(α − β), evaluated exactly in ℚ(√(1+k)).
pub fn seq_binet(k: &Rational, n: u64) -> Result<Rational> {
    let (alpha, beta) = make_alpha_beta(k)?;
    let numer = alpha.pow(n) - beta.pow(n);
    let value = numer.try_div(&(&alpha - &beta))?;
    value
        .rationalize()
        .map_err(|e| Error::Internal(format!("Binet value for k={k}, n={n} is irrational: {e}")))
}

/// Σᵢ₌₀ⁿ Pᵢ = (−1 + Pₙ₊₁ + k·Pₙ)/(k + 1).
pub fn seq_prefix_sum(k: &Rational, n: u64) -> Result<Rational> {
    require_positive_k(k)?;
    let (p_n, p_next) = pell_pair(k, n as i64);
    (p_next + k * p_n - Rational::one()).try_div(&(k + Rational::one()))
}

/// Sₙ + i·Sₙ₊₁ + ε·Sₙ₊₂ + iε·Sₙ₊₃.
pub fn dc_number(family: SequenceFamily, k: &Rational, n: i64) -> Result<DualComplex<Rational>> {
    let spec = SequenceSpec::new(family, k.clone())?;
    let terms = spec.window(n, 4);
    Ok(DualComplex::from_rationals([
        &terms[0], &terms[1], &terms[2], &terms[3],
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn spec(family: SequenceFamily, k: i64) -> SequenceSpec {
        SequenceSpec::new(family, int(k)).unwrap()
    }

    fn ints(values: &[i64]) -> Vec<Rational> {
        values.iter().copied().map(int).collect()
    }

    #[test]
    fn third_term_is_k_plus_four() {
        for k in 1..=5 {
            assert_eq!(seq_term(&spec(SequenceFamily::KPell, k), 3), int(k + 4));
        }
    }

    #[test]
    fn initial_terms() {
        let p2 = spec(SequenceFamily::KPell, 2);
        assert_eq!(
            (0..=5).map(|n| seq_term(&p2, n)).collect::<Vec<_>>(),
            ints(&[0, 1, 2, 6, 16, 44])
        );
        assert_eq!(seq_term(&p2, -1), ratio(1, 2));
        let pl = spec(SequenceFamily::KPellLucas, 1);
        assert_eq!(
            (0..=4).map(|n| seq_term(&pl, n)).collect::<Vec<_>>(),
            ints(&[2, 2, 6, 14, 34])
        );
        let mp = spec(SequenceFamily::ModifiedKPell, 1);
        assert_eq!(
            (0..=4).map(|n| seq_term(&mp, n)).collect::<Vec<_>>(),
            ints(&[1, 1, 3, 7, 17])
        );
    }

    #[test]
    fn rejects_non_positive_k() {
        assert!(SequenceSpec::new(SequenceFamily::KPell, int(0)).is_err());
        assert!(SequenceSpec::new(SequenceFamily::KPell, ratio(-3, 2)).is_err());
        assert!(seq_binet(&int(-1), 3).is_err());
        assert!(seq_prefix_sum(&int(0), 3).is_err());
    }

    #[test]
    fn window_matches_pointwise() {
        for family in SequenceFamily::ALL {
            let s = SequenceSpec::new(family, ratio(3, 2)).unwrap();
            let window = s.window(-4, 12);
            for (offset, value) in window.iter().enumerate() {
                assert_eq!(value, &seq_term(&s, -4 + offset as i64));
            }
        }
    }

    #[test]
    fn recurrence_holds_including_negative_indices() {
        for family in SequenceFamily::ALL {
            for k in [int(1), int(2), int(5), ratio(1, 2), ratio(22, 7)] {
                let s = SequenceSpec::new(family, k.clone()).unwrap();
                for n in -10..30 {
                    let lhs = seq_term(&s, n + 2);
                    let rhs = int(2) * seq_term(&s, n + 1) + &k * seq_term(&s, n);
                    assert_eq!(lhs, rhs, "{family} k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn fast_matches_naive() {
        assert_eq!(seq_term_fast(&spec(SequenceFamily::KPell, 2), 5), int(44));
        for family in SequenceFamily::ALL {
            for k in 1..=8 {
                let s = spec(family, k);
                let naive = s.window(0, 513);
                for (n, value) in naive.iter().enumerate() {
                    assert_eq!(&seq_term_fast(&s, n as u64), value);
                }
            }
        }
        let s = spec(SequenceFamily::KPell, 1);
        assert_eq!(seq_term_fast(&s, 1000), seq_term(&s, 1000));
        let r = SequenceSpec::new(SequenceFamily::KPellLucas, ratio(7, 3)).unwrap();
        assert_eq!(seq_term_fast(&r, 77), seq_term(&r, 77));
    }

    #[test]
    fn binet_examples() {
        assert_eq!(seq_binet(&int(1), 4).unwrap(), int(12));
        assert_eq!(seq_binet(&ratio(5, 3), 0).unwrap(), int(0));
        assert_eq!(seq_binet(&int(3), 3).unwrap(), int(7));
    }

    #[test]
    fn prefix_sums() {
        assert_eq!(seq_prefix_sum(&int(2), 2).unwrap(), int(3));
        assert_eq!(seq_prefix_sum(&int(1), 4).unwrap(), int(20));
        assert_eq!(seq_prefix_sum(&int(7), 0).unwrap(), int(0));
        for k in 1..=8 {
            let s = spec(SequenceFamily::KPell, k);
            let mut running = Rational::zero();
            for n in 0..=128u64 {
                running += seq_term(&s, n as i64);
                assert_eq!(seq_prefix_sum(&int(k), n).unwrap(), running);
            }
        }
    }

    #[test]
    fn modified_pell_forms_agree() {
        for k in [int(1), int(3), ratio(2, 5)] {
            let p = SequenceSpec::new(SequenceFamily::KPell, k.clone()).unwrap();
            let mp = SequenceSpec::new(SequenceFamily::ModifiedKPell, k.clone()).unwrap();
            for n in 1..60 {
                assert_eq!(seq_term(&mp, n), seq_term(&p, n) + &k * seq_term(&p, n - 1));
                assert_eq!(seq_term(&mp, n), seq_term(&p, n + 1) - seq_term(&p, n));
            }
        }
    }

    #[test]
    fn integer_k_gives_integers() {
        for family in SequenceFamily::ALL {
            for k in 1..=6 {
                for value in spec(family, k).window(0, 80) {
                    assert!(value.is_integer());
                }
            }
        }
    }

    #[test]
    fn dc_numbers() {
        let expect = |v: [i64; 4]| DualComplex::new(int(v[0]), int(v[1]), int(v[2]), int(v[3]));
        assert_eq!(
            dc_number(SequenceFamily::KPell, &int(1), 0).unwrap(),
            expect([0, 1, 2, 5])
        );
        assert_eq!(
            dc_number(SequenceFamily::KPell, &int(2), 1).unwrap(),
            expect([1, 2, 6, 16])
        );
        assert_eq!(
            dc_number(SequenceFamily::KPellLucas, &int(1), 0).unwrap(),
            expect([2, 2, 6, 14])
        );
    }

    #[test]
    fn family_tags_parse() {
        for family in SequenceFamily::ALL {
            assert_eq!(family.tag().parse::<SequenceFamily>().unwrap(), family);
        }
        assert!("fibonacci".parse::<SequenceFamily>().is_err());
    }
}
