use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use super::family::d3_family;
use super::params::beta_of;
use super::sieve::{filter_verdicts, FilterVerdict};
use crate::error::Error;
use crate::exactnum::ExactValue;
use crate::graphs::{construct_family, intersection_array_from_vertex, Family};
use crate::spectral::{spectrum, IntersectionArray};

/// Largest diameter `classify` accepts; beyond it the ordering search and
/// the family constructions are out of reach.
pub const MAX_CLASSIFY_DIAMETER: usize = 8;

/// Serialized as its `Display` string, e.g. `OddGraph(3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The `(2D+1)`-gon.
    Cycle(usize),
    /// The folded `(2D+1)`-cube.
    FoldedCube(usize),
    /// The Odd graph on a `(2D+1)`-set.
    OddGraph(usize),
    /// A point of the open diameter-3 family.
    D3Family {
        beta: ExactValue,
        mu: i64,
    },
    NotQPolynomial,
    NotAlmostBipartite,
    /// Q-polynomial and almost-bipartite, yet neither a known family nor a
    /// family point. The classification rules this out.
    TheoremContradiction(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Cycle(d) => write!(f, "Cycle({d})"),
            Verdict::FoldedCube(d) => write!(f, "FoldedCube({d})"),
            Verdict::OddGraph(d) => write!(f, "OddGraph({d})"),
            Verdict::D3Family { beta, mu } => write!(f, "D3Family({beta},{mu})"),
            Verdict::NotQPolynomial => f.write_str("NotQPolynomial"),
            Verdict::NotAlmostBipartite => f.write_str("NotAlmostBipartite"),
            Verdict::TheoremContradiction(why) => write!(f, "TheoremContradiction({why})"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One Q-polynomial ordering with its `beta` and `mu = c_2`. `beta` is
/// left out when `D > 3` and `theta_0..theta_3` are not all rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderingEvidence {
    pub permutation: Vec<usize>,
    pub eigenvalues: Vec<ExactValue>,
    pub beta: Option<ExactValue>,
    pub mu: i64,
    pub formal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    #[serde(serialize_with = "super::sieve::ser_display")]
    pub array: IntersectionArray,
    pub verdict: Verdict,
    pub orderings: Vec<OrderingEvidence>,
    /// Feasibility filters, attached to family points.
    pub flags: Option<Vec<FilterVerdict>>,
}

impl Classification {
    /// `(beta, mu)` per ordering, in ordering order.
    pub fn beta_mu_pairs(&self) -> Vec<(ExactValue, i64)> {
        self.orderings
            .iter()
            .filter_map(|o| o.beta.clone().map(|b| (b, o.mu)))
            .collect()
    }
}

type FamilyCache = Mutex<HashMap<(Family, usize), Option<IntersectionArray>>>;

/// The intersection array of the family member with diameter `d`
/// (ground size `2d + 1`), read off a BFS of the constructed graph.
pub fn known_family_array(family: Family, d: usize) -> Option<IntersectionArray> {
    static CACHE: OnceLock<FamilyCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get(&(family, d))
    {
        return a.clone();
    }
    let arr = construct_family(family, 2 * d + 1)
        .ok()
        .and_then(|g| intersection_array_from_vertex(&g, 0).ok())
        .and_then(|r| r.array().cloned());
    cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert((family, d), arr.clone());
    arr
}

/// The known-family verdict whose array equals `arr`, if any.
pub fn match_known_family(arr: &IntersectionArray) -> Option<Verdict> {
    let d = arr.diameter();
    [
        (Family::Cycle, Verdict::Cycle(d)),
        (Family::FoldedCube, Verdict::FoldedCube(d)),
        (Family::Odd, Verdict::OddGraph(d)),
    ]
    .into_iter()
    .find(|(f, _)| known_family_array(*f, d).as_ref() == Some(arr))
    .map(|(_, v)| v)
}

/// Decides which case of the classification an array falls under.
pub fn classify(arr: &IntersectionArray) -> Result<Classification, Error> {
    let mut out = Classification {
        array: arr.clone(),
        verdict: Verdict::NotAlmostBipartite,
        orderings: Vec::new(),
        flags: None,
    };
    if !arr.is_almost_bipartite() {
        return Ok(out);
    }
    let d = arr.diameter();
    if d < 3 {
        return Err(Error::Parameter(format!(
            "classification needs D >= 3, got {d}"
        )));
    }
    if d > MAX_CLASSIFY_DIAMETER {
        return Err(Error::Parameter(format!(
            "classification handles D <= {MAX_CLASSIFY_DIAMETER}, got {d}"
        )));
    }
    let sd = spectrum(arr)?;
    let mu = arr.c(2);
    for o in sd.q_polynomial_orderings()? {
        let e = &o.eigenvalues;
        // conjugate eigenvalues get separate generators, so for D > 3 an
        // irrational beta can cost minutes; it is not needed there
        let cheap = d == 3 || e[..4].iter().all(|x| x.as_rational().is_some());
        out.orderings.push(OrderingEvidence {
            beta: if cheap {
                Some(beta_of([&e[0], &e[1], &e[2], &e[3]])?)
            } else {
                None
            },
            permutation: o.permutation,
            eigenvalues: o.eigenvalues,
            mu,
            formal: o.formal,
        });
    }
    if out.orderings.is_empty() {
        out.verdict = Verdict::NotQPolynomial;
        return Ok(out);
    }
    if let Some(v) = match_known_family(arr) {
        out.verdict = v;
        return Ok(out);
    }
    if d > 3 {
        out.verdict = Verdict::TheoremContradiction(format!(
            "Q-polynomial almost-bipartite array of diameter {d} matches no known family"
        ));
        return Ok(out);
    }
    for o in &out.orderings {
        let beta = o.beta.clone().expect("computed when D = 3");
        let point = d3_family(&beta, mu)?;
        let matches = point.k == ExactValue::from_int(arr.k())
            && point.c3 == ExactValue::from_int(arr.c(3))
            && point.theta == o.eigenvalues;
        if matches {
            out.flags = Some(filter_verdicts(&point, Some(&sd))?);
            out.verdict = Verdict::D3Family { beta, mu };
            return Ok(out);
        }
    }
    out.verdict = Verdict::TheoremContradiction(
        "diameter-3 Q-polynomial array fits no (beta, mu) of the family".into(),
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify_str(s: &str) -> Classification {
        classify(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn known_families() {
        let c = classify_str("{4,3,3;1,1,2}");
        assert_eq!(c.verdict, Verdict::OddGraph(3));
        assert_eq!(c.beta_mu_pairs(), vec![(ExactValue::from_int(-2), 1)]);
        let c = classify_str("{7,6,5;1,2,3}");
        assert_eq!(c.verdict, Verdict::FoldedCube(3));
        assert_eq!(
            c.beta_mu_pairs(),
            vec![(ExactValue::from_int(2), 2), (ExactValue::from_int(-2), 2)]
        );
        assert_eq!(classify_str("{2,1,1;1,1,1}").verdict, Verdict::Cycle(3));
        assert_eq!(
            classify_str("{3,2,1;1,2,3}").verdict,
            Verdict::NotAlmostBipartite
        );
    }

    #[test]
    fn family_point() {
        let c = classify_str("{41,40,40;1,1,14}");
        assert_eq!(
            c.verdict,
            Verdict::D3Family {
                beta: ExactValue::from_int(-3),
                mu: 1
            }
        );
        assert_eq!(c.verdict.to_string(), "D3Family(-3,1)");
        assert!(c.flags.is_some());
    }

    #[test]
    fn not_q_polynomial() {
        // almost bipartite, but its orderings fail
        let c = classify_str("{5,4,1,1;1,1,4,5}");
        assert!(matches!(
            c.verdict,
            Verdict::NotAlmostBipartite | Verdict::NotQPolynomial
        ));
    }

    #[test]
    fn known_arrays() {
        assert_eq!(
            known_family_array(Family::Odd, 4).unwrap().to_string(),
            "{5,4,4,3;1,1,2,2}"
        );
        assert_eq!(
            known_family_array(Family::FoldedCube, 4)
                .unwrap()
                .to_string(),
            "{9,8,7,6;1,2,3,4}"
        );
    }
}
