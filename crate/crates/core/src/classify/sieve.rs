use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::classifier::match_known_family;
use super::curtin::curtin_gap_values;
use super::family::{d3_family, D3FamilyPoint};
use crate::error::{Error, ParseError};
use crate::exactnum::{ExactValue, Tower};
use crate::spectral::{spectrum, IntersectionArray, SpectralData};

/// Filter names in the order they are applied.
pub const FILTER_NAMES: [&str; 10] = [
    "positive_integral",
    "a3_positive",
    "monotone",
    "integral_multiplicities",
    "krein_nonnegative",
    "integral_eigenvalues",
    "curtin",
    "theta1_negative",
    "b2_factor_positive",
    "q_polynomial",
];

/// One filter outcome; `None` when it needs a spectrum that could not be
/// computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterVerdict {
    pub name: String,
    pub pass: Option<bool>,
}

pub(crate) fn ser_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn ser_display_opt<T: fmt::Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

fn ser_filters<S: Serializer>(v: &[FilterVerdict], s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(v.iter().map(|f| (&f.name, f.pass)))
}

fn positive(x: &ExactValue) -> bool {
    x.sign() > 0
}

fn is_pos_int(x: &ExactValue) -> bool {
    x.is_integer() && positive(x)
}

/// `beta^2 + beta - 1 - beta mu`.
fn b2_factor(beta: &ExactValue, mu: i64) -> ExactValue {
    let (mut t, e) = Tower::with_values(std::slice::from_ref(beta));
    let b = &e[0];
    let v = t.sub(
        &t.add(&t.mul_full(b, b), b),
        &t.add(&t.one(), &t.mul_full(b, &t.int(mu))),
    );
    t.to_exact(&v)
}

/// Positions of `point.theta` in the spectrum, if every value occurs.
fn theta_permutation(point: &D3FamilyPoint, sd: &SpectralData) -> Option<Vec<usize>> {
    let perm: Vec<usize> = point
        .theta
        .iter()
        .map(|th| sd.eigenvalues.iter().position(|e| e == th))
        .collect::<Option<_>>()?;
    let mut seen = perm.clone();
    seen.sort_unstable();
    seen.dedup();
    (seen.len() == perm.len() && perm[0] == 0).then_some(perm)
}

/// Applies every filter to a family point. `sd` is the spectrum of
/// `point.array`, when it could be computed.
pub fn filter_verdicts(
    point: &D3FamilyPoint,
    sd: Option<&SpectralData>,
) -> Result<Vec<FilterVerdict>, Error> {
    let (k, c2, c3) = (&point.k, &point.c2, &point.c3);
    let q_poly = match (sd, sd.and_then(|s| theta_permutation(point, s))) {
        (Some(s), Some(perm)) => {
            let c = s.check_ordering(&perm);
            if c.definition != c.krein {
                return Err(Error::CriterionDisagreement {
                    ordering: c.permutation,
                    definition: c.definition,
                    krein: c.krein,
                });
            }
            Some(c.definition)
        }
        (Some(_), None) => Some(false),
        (None, _) => None,
    };
    let pass = [
        Some(is_pos_int(k) && is_pos_int(c2) && is_pos_int(c3)),
        Some(k > c3),
        Some(
            point
                .array
                .as_ref()
                .is_some_and(|a| a.check_feasible().is_ok()),
        ),
        sd.map(SpectralData::multiplicities_are_positive_integers),
        sd.map(SpectralData::krein_nonnegative),
        Some(point.theta.iter().all(ExactValue::is_integer)),
        Some(
            point.theta[1..]
                .iter()
                .all(|th| !curtin_gap_values(k, c2, th).is_zero()),
        ),
        Some(point.theta[1].sign() < 0),
        Some(positive(&b2_factor(&point.beta, point.mu))),
        q_poly,
    ];
    Ok(FILTER_NAMES
        .iter()
        .zip(pass)
        .map(|(name, pass)| FilterVerdict {
            name: name.to_string(),
            pass,
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecordVerdict {
    /// Every filter passes and the array is no known graph.
    D3Family,
    /// Every filter passes; the array is that of a known graph.
    Known(String),
    /// The first failing filter, or `spectrum` when a filter could not be
    /// decided.
    Rejected(String),
}

impl fmt::Display for RecordVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecordVerdict::D3Family => f.write_str("D3Family"),
            RecordVerdict::Known(v) => write!(f, "known:{v}"),
            RecordVerdict::Rejected(r) => write!(f, "rejected:{r}"),
        }
    }
}

impl FromStr for RecordVerdict {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        if s == "D3Family" {
            return Ok(RecordVerdict::D3Family);
        }
        if let Some(v) = s.strip_prefix("known:") {
            return Ok(RecordVerdict::Known(v.to_string()));
        }
        if let Some(r) = s.strip_prefix("rejected:") {
            return Ok(RecordVerdict::Rejected(r.to_string()));
        }
        Err(ParseError::new(format!("unknown verdict `{s}`")))
    }
}

impl Serialize for RecordVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One cell `(beta, mu)` of the sieve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateRecord {
    pub beta: i64,
    pub mu: i64,
    pub k: ExactValue,
    pub c2: i64,
    pub c3: ExactValue,
    #[serde(serialize_with = "ser_display_opt")]
    pub array: Option<IntersectionArray>,
    /// Vertex count from the array, when it is valid.
    pub n: Option<ExactValue>,
    /// `theta_0..theta_3` in Q-polynomial order.
    pub thetas: Vec<ExactValue>,
    /// Multiplicities of `thetas`, in the same order.
    pub mults: Option<Vec<ExactValue>>,
    #[serde(serialize_with = "ser_filters")]
    pub filters: Vec<FilterVerdict>,
    pub verdict: RecordVerdict,
}

fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn opt_str<T: fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "na".to_string(), |v| v.to_string())
}

impl fmt::Display for CandidateRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "beta={} mu={} k={} c2={} c3={} array={} n={} thetas={} mults={}",
            self.beta,
            self.mu,
            self.k,
            self.c2,
            self.c3,
            opt_str(self.array.as_ref()),
            opt_str(self.n.as_ref()),
            join(&self.thetas),
            opt_str(self.mults.as_deref().map(join)),
        )?;
        for fv in &self.filters {
            write!(f, " {}={}", fv.name, opt_str(fv.pass))?;
        }
        write!(f, " verdict={}", self.verdict)
    }
}

fn parse_field<T: FromStr>(key: &str, v: &str) -> Result<T, ParseError> {
    v.parse()
        .map_err(|_| ParseError::new(format!("bad value `{v}` for `{key}`")))
}

fn parse_opt<T: FromStr>(key: &str, v: &str) -> Result<Option<T>, ParseError> {
    if v == "na" {
        Ok(None)
    } else {
        parse_field(key, v).map(Some)
    }
}

fn parse_list(key: &str, v: &str) -> Result<Vec<ExactValue>, ParseError> {
    v.split(',').map(|x| parse_field(key, x)).collect()
}

/// Reads back a line written by `CandidateRecord`'s `Display`.
pub fn parse_record(line: &str) -> Result<CandidateRecord, ParseError> {
    let mut rec = CandidateRecord {
        beta: 0,
        mu: 0,
        k: ExactValue::from_int(0),
        c2: 0,
        c3: ExactValue::from_int(0),
        array: None,
        n: None,
        thetas: Vec::new(),
        mults: None,
        filters: Vec::new(),
        verdict: RecordVerdict::D3Family,
    };
    let mut seen = Vec::new();
    for tok in line.split_whitespace() {
        let (key, v) = tok
            .split_once('=')
            .ok_or_else(|| ParseError::new(format!("expected key=value, got `{tok}`")))?;
        match key {
            "beta" => rec.beta = parse_field(key, v)?,
            "mu" => rec.mu = parse_field(key, v)?,
            "k" => rec.k = parse_field(key, v)?,
            "c2" => rec.c2 = parse_field(key, v)?,
            "c3" => rec.c3 = parse_field(key, v)?,
            "array" => rec.array = parse_opt(key, v)?,
            "n" => rec.n = parse_opt(key, v)?,
            "thetas" => rec.thetas = parse_list(key, v)?,
            "mults" => {
                rec.mults = if v == "na" {
                    None
                } else {
                    Some(parse_list(key, v)?)
                }
            }
            "verdict" => rec.verdict = v.parse()?,
            name if FILTER_NAMES.contains(&name) => rec.filters.push(FilterVerdict {
                name: name.to_string(),
                pass: parse_opt(key, v)?,
            }),
            other => return Err(ParseError::new(format!("unknown key `{other}`"))),
        }
        seen.push(key.to_string());
    }
    for key in [
        "beta", "mu", "k", "c2", "c3", "array", "n", "thetas", "mults", "verdict",
    ] {
        if !seen.iter().any(|s| s == key) {
            return Err(ParseError::new(format!("missing key `{key}`")));
        }
    }
    if rec.filters.len() != FILTER_NAMES.len() {
        return Err(ParseError::new("missing filter outcomes"));
    }
    Ok(rec)
}

/// Builds the record for one cell.
pub fn candidate(beta: i64, mu: i64) -> Result<CandidateRecord, Error> {
    let point = d3_family(&ExactValue::from_int(beta), mu)?;
    let arr = point.array.as_ref().filter(|a| a.check_basic().is_ok());
    let sd = arr.and_then(|a| spectrum(a).ok());
    let filters = filter_verdicts(&point, sd.as_ref())?;
    let mults = sd.as_ref().and_then(|s| {
        point
            .theta
            .iter()
            .map(|th| {
                s.eigenvalues
                    .iter()
                    .position(|e| e == th)
                    .map(|i| s.multiplicities[i].clone())
            })
            .collect::<Option<Vec<_>>>()
    });
    let verdict = match filters.iter().find(|f| f.pass == Some(false)) {
        Some(f) => RecordVerdict::Rejected(f.name.clone()),
        None if filters.iter().any(|f| f.pass.is_none()) => {
            RecordVerdict::Rejected("spectrum".into())
        }
        None => match point.array.as_ref().and_then(match_known_family) {
            Some(v) => RecordVerdict::Known(v.to_string()),
            None => RecordVerdict::D3Family,
        },
    };
    Ok(CandidateRecord {
        beta,
        mu,
        n: arr.map(|a| ExactValue::Rational(a.vertex_count())),
        k: point.k.clone(),
        c2: mu,
        c3: point.c3.clone(),
        array: point.array.clone(),
        thetas: point.theta.clone(),
        mults,
        filters,
        verdict,
    })
}

/// Evaluates every cell `beta_min <= beta <= beta_max`, `1 <= mu <= mu_max`,
/// ordered by `beta` then `mu`. Without `wide`, `beta` must stay below -2.
pub fn sieve(
    beta_min: i64,
    beta_max: i64,
    mu_max: i64,
    wide: bool,
) -> Result<Vec<CandidateRecord>, Error> {
    if beta_min > beta_max || mu_max < 1 {
        return Err(Error::Parameter(format!(
            "empty sieve range: beta in [{beta_min}, {beta_max}], mu in [1, {mu_max}]"
        )));
    }
    if !wide && beta_max >= -2 {
        return Err(Error::Parameter(format!(
            "beta_max = {beta_max} reaches -2 or above; pass --wide to include it"
        )));
    }
    let cells: Vec<(i64, i64)> = (beta_min..=beta_max)
        .flat_map(|b| (1..=mu_max).map(move |m| (b, m)))
        .collect();
    cells
        .into_par_iter()
        .map(|(b, m)| candidate(b, m))
        .collect()
}

/// One line of totals: records, verdict counts and failures per filter.
pub fn summary_line(records: &[CandidateRecord]) -> String {
    let count =
        |p: &dyn Fn(&RecordVerdict) -> bool| records.iter().filter(|r| p(&r.verdict)).count();
    let mut s = format!(
        "summary records={} d3family={} known={} rejected={}",
        records.len(),
        count(&|v| *v == RecordVerdict::D3Family),
        count(&|v| matches!(v, RecordVerdict::Known(_))),
        count(&|v| matches!(v, RecordVerdict::Rejected(_))),
    );
    for name in FILTER_NAMES {
        let failed = records
            .iter()
            .filter(|r| {
                r.filters
                    .iter()
                    .any(|f| f.name == name && f.pass == Some(false))
            })
            .count();
        s.push_str(&format!(" {name}_failed={failed}"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_minus_three_one() {
        let r = candidate(-3, 1).unwrap();
        assert_eq!(r.array.as_ref().unwrap().to_string(), "{41,40,40;1,1,14}");
        assert_eq!(join(&r.thetas), "41,-16,7,-5");
        assert_eq!(r.filters.len(), FILTER_NAMES.len());
        let line = r.to_string();
        assert_eq!(parse_record(&line).unwrap(), r);
    }

    #[test]
    fn odd_graph_cell_is_known() {
        let r = candidate(-2, 1).unwrap();
        assert!(r.filters.iter().all(|f| f.pass == Some(true)), "{r}");
        assert_eq!(r.verdict, RecordVerdict::Known("OddGraph(3)".into()));
    }

    #[test]
    fn range_errors() {
        assert!(sieve(-3, -4, 5, false).is_err());
        assert!(sieve(-3, -2, 5, false).is_err());
        assert!(sieve(-3, -2, 5, true).is_ok());
        assert!(sieve(-3, -3, 0, false).is_err());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_record("beta=1").is_err());
        assert!(parse_record("nonsense").is_err());
    }
}
