//! Parameter sweeps over the identity catalog with a three-way verdict.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dual_complex::DualComplex;
use crate::error::{Error, Result};
use crate::identity::{identity_sides, Bindings, IdentityId, Param};
use crate::scalar::{format_rational, int, parse_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// No tuple of the grid fails.
    Holds,
    /// Every k = 1 tuple passes, some other tuple fails.
    #[serde(rename = "holds_only_k1")]
    HoldsOnlyAtKOne,
    /// Some k = 1 tuple fails, or there are no k = 1 tuples and some tuple fails.
    Fails,
}

impl Verdict {
    pub fn tag(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::HoldsOnlyAtKOne => "holds_only_k1",
            Verdict::Fails => "fails",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub ids: Vec<IdentityId>,
    pub k_values: Vec<Rational>,
    pub n_range: RangeInclusive<i64>,
    pub m_range: RangeInclusive<i64>,
    pub r_range: RangeInclusive<i64>,
    pub max_counterexamples: usize,
}

impl Default for SweepConfig {
    /// k ∈ {1, 2, 3}, n, m ∈ 0..=20, r ∈ 1..=8, five counterexamples each.
    fn default() -> Self {
        Self {
            ids: IdentityId::ALL.to_vec(),
            k_values: vec![int(1), int(2), int(3)],
            n_range: 0..=20,
            m_range: 0..=20,
            r_range: 1..=8,
            max_counterexamples: 5,
        }
    }
}

impl SweepConfig {
    pub fn for_ids(ids: Vec<IdentityId>) -> Self {
        Self {
            ids,
            ..Self::default()
        }
    }

    /// Every binding tuple of `id` in lexicographic (k, n, m, r) order.
    fn tuples(&self, id: IdentityId) -> Vec<Bindings> {
        let axis = |param: Param, range: &RangeInclusive<i64>| -> Vec<Option<i64>> {
            if id.takes(param) {
                range.clone().map(Some).collect()
            } else {
                vec![None]
            }
        };
        let mut ks = self.k_values.clone();
        ks.sort();
        ks.dedup();
        let ns = axis(Param::N, &self.n_range);
        let ms = axis(Param::M, &self.m_range);
        let rs = axis(Param::R, &self.r_range);
        let mut out = Vec::with_capacity(ks.len() * ns.len() * ms.len() * rs.len());
        for k in &ks {
            for &n in &ns {
                for &m in &ms {
                    for &r in &rs {
                        out.push(Bindings {
                            k: Some(k.clone()),
                            n,
                            m,
                            r,
                        });
                    }
                }
            }
        }
        out
    }
}

/// Result of a single evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub equal: bool,
    pub lhs: DualComplex<Rational>,
    pub rhs: DualComplex<Rational>,
}

pub fn check_one(id: IdentityId, bindings: &Bindings) -> Result<CheckResult> {
    let (lhs, rhs) = identity_sides(id, bindings)?;
    Ok(CheckResult {
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

/// A failing tuple. Evaluation errors are failures with `error` set and no
/// sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    #[serde(with = "rational_text")]
    pub k: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    pub lhs: Option<DualComplex<Rational>>,
    pub rhs: Option<DualComplex<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Counterexample {
    pub fn bindings(&self) -> Bindings {
        Bindings {
            k: Some(self.k.clone()),
            n: self.n,
            m: self.m,
            r: self.r,
        }
    }
}

mod rational_text {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &Rational,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub grid_size: usize,
    pub skipped: usize,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    #[serde(rename = "elapsed_ms", with = "millis")]
    pub elapsed: Duration,
}

mod millis {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &Duration,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(value.as_millis() as u64)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Duration, D::Error> {
        Ok(Duration::from_millis(u64::deserialize(d)?))
    }
}

enum Outcome {
    Equal,
    Unequal(Box<(DualComplex<Rational>, DualComplex<Rational>)>),
    Error(String),
}

fn classify(failures_at_k_one: bool, any_failure: bool, any_k_one: bool) -> Verdict {
    if !any_failure {
        Verdict::Holds
    } else if any_k_one && !failures_at_k_one {
        Verdict::HoldsOnlyAtKOne
    } else {
        Verdict::Fails
    }
}

pub fn sweep_one(config: &SweepConfig, id: IdentityId) -> IdentityReport {
    let start = Instant::now();
    let (admitted, skipped): (Vec<Bindings>, Vec<Bindings>) =
        config.tuples(id).into_iter().partition(|b| id.admits(b));
    // Parallel map, order-preserving collect.
    let outcomes: Vec<Outcome> = admitted
        .par_iter()
        .map(|b| match identity_sides(id, b) {
            Ok((lhs, rhs)) if lhs == rhs => Outcome::Equal,
            Ok((lhs, rhs)) => Outcome::Unequal(Box::new((lhs, rhs))),
            Err(e) => Outcome::Error(e.to_string()),
        })
        .collect();

    let one = Rational::one();
    let mut counterexamples = Vec::new();
    let (mut any_failure, mut failures_at_k_one, mut any_k_one) = (false, false, false);
    for (b, outcome) in admitted.iter().zip(outcomes) {
        let at_k_one = b.k.as_ref() == Some(&one);
        any_k_one |= at_k_one;
        let (lhs, rhs, error) = match outcome {
            Outcome::Equal => continue,
            Outcome::Unequal(pair) => {
                let (l, r) = *pair;
                (Some(l), Some(r), None)
            }
            Outcome::Error(e) => (None, None, Some(e)),
        };
        any_failure = true;
        failures_at_k_one |= at_k_one;
        if counterexamples.len() < config.max_counterexamples {
            counterexamples.push(Counterexample {
                k: b.k.clone().expect("sweeps bind k"),
                n: b.n,
                m: b.m,
                r: b.r,
                lhs,
                rhs,
                error,
            });
        }
    }

    IdentityReport {
        identity: id,
        grid_size: admitted.len(),
        skipped: skipped.len(),
        verdict: classify(failures_at_k_one, any_failure, any_k_one),
        counterexamples,
        elapsed: start.elapsed(),
    }
}

/// One report per requested identity, in the order given.
pub fn sweep(config: &SweepConfig) -> Vec<IdentityReport> {
    config.ids.iter().map(|&id| sweep_one(config, id)).collect()
}

/// Verdict of `id` under the default sweep.
pub fn adjudicate(id: IdentityId) -> Verdict {
    sweep_one(&SweepConfig::for_ids(vec![id]), id).verdict
}

pub fn reports_to_json(reports: &[IdentityReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn reports_from_json(text: &str) -> Result<Vec<IdentityReport>> {
    serde_json::from_str(text).map_err(|e| Error::Internal(format!("bad report JSON: {e}")))
}

/// `"<id> <verdict> <grid_size> <skipped>"`
pub fn summary_line(report: &IdentityReport) -> String {
    format!(
        "{} {} {} {}",
        report.identity, report.verdict, report.grid_size, report.skipped
    )
}

pub fn summary_csv(reports: &[IdentityReport]) -> String {
    let mut out = String::from("identity,verdict,grid_size,skipped\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.identity, r.verdict, r.grid_size, r.skipped
        ));
    }
    out
}

/// Parses `"a..b"` (inclusive) or a single integer.
pub fn parse_range(text: &str) -> Result<RangeInclusive<i64>> {
    let bad = || Error::OutOfRange {
        id: "range".into(),
        reason: format!("malformed range {text:?}"),
    };
    let parse = |s: &str| s.trim().parse::<i64>().map_err(|_| bad());
    match text.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let v = parse(text)?;
            Ok(v..=v)
        }
    }
}

/// Parses `"all"` or a comma-separated list of identity tags.
pub fn parse_ids(text: &str) -> Result<Vec<IdentityId>> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(IdentityId::ALL.to_vec());
    }
    text.split(',').map(IdentityId::from_str).collect()
}

pub fn parse_k_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}
