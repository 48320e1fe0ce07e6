//! Standalone exact real values: rationals, or irrational algebraic reals.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::algebraic::AlgebraicReal;
use super::poly::IntPolynomial;
use crate::error::ParseError;

/// An exact real number. Rationals are always stored as `Rational`, so two
/// values are equal exactly when their variants and contents agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactValue {
    Rational(BigRational),
    Algebraic(AlgebraicReal),
}

impl ExactValue {
    pub fn from_int(i: i64) -> Self {
        ExactValue::Rational(BigRational::from_integer(BigInt::from(i)))
    }

    pub fn from_bigint(i: BigInt) -> Self {
        ExactValue::Rational(BigRational::from_integer(i))
    }

    pub fn from_algebraic(a: AlgebraicReal) -> Self {
        match a.as_rational() {
            Some(r) => ExactValue::Rational(r.clone()),
            None => ExactValue::Algebraic(a),
        }
    }

    pub fn to_algebraic(&self) -> AlgebraicReal {
        match self {
            ExactValue::Rational(r) => AlgebraicReal::from_rational(r.clone()),
            ExactValue::Algebraic(a) => a.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactValue::Rational(r) => Some(r),
            ExactValue::Algebraic(_) => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|i| i.to_i64())
    }

    pub fn is_integer(&self) -> bool {
        self.as_integer().is_some()
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExactValue::Rational(r) if r.is_zero())
    }

    pub fn sign(&self) -> i32 {
        match self {
            ExactValue::Rational(r) => {
                if r.is_zero() {
                    0
                } else if r.is_positive() {
                    1
                } else {
                    -1
                }
            }
            ExactValue::Algebraic(a) => a.sign(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactValue::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            ExactValue::Algebraic(a) => a.to_f64(),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            ExactValue::Rational(r) => ExactValue::Rational(-r.clone()),
            ExactValue::Algebraic(a) => ExactValue::Algebraic(a.neg()),
        }
    }
}

impl PartialOrd for ExactValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExactValue::Rational(a), ExactValue::Rational(b)) => a.cmp(b),
            _ => self.to_algebraic().cmp_exact(&other.to_algebraic()),
        }
    }
}

impl From<i64> for ExactValue {
    fn from(i: i64) -> Self {
        ExactValue::from_int(i)
    }
}

impl From<BigRational> for ExactValue {
    fn from(r: BigRational) -> Self {
        ExactValue::Rational(r)
    }
}

/// Integers print bare, other rationals as `p/q`, irrationals as
/// `root(<polynomial>, <12-digit decimal>)`.
impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Rational(r) => write!(f, "{r}"),
            ExactValue::Algebraic(a) => write!(f, "{a}"),
        }
    }
}

impl FromStr for ExactValue {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("root(").and_then(|r| r.strip_suffix(')')) {
            let (poly, approx) = inner.rsplit_once(',').ok_or_else(|| {
                ParseError::new("root(...) needs a polynomial and an approximation")
            })?;
            let poly = parse_polynomial(poly)?;
            let approx = parse_decimal(approx.trim())?;
            let root = AlgebraicReal::root_near(&poly, &approx)
                .ok_or_else(|| ParseError::new("polynomial has no real root"))?;
            return Ok(ExactValue::from_algebraic(root));
        }
        parse_rational(s).map(ExactValue::Rational)
    }
}

/// Serialized through the display form, so JSON carries the same text as
/// the plain output.
impl serde::Serialize for ExactValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for ExactValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let s = s.trim();
    let bad = || ParseError::new(format!("not an exact rational: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            if s.contains('.') {
                return parse_decimal(s);
            }
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

fn parse_decimal(s: &str) -> Result<BigRational, ParseError> {
    let bad = || ParseError::new(format!("not a decimal: `{s}`"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    let digits = format!("{ip}{fp}");
    let n: BigInt = digits.parse().map_err(|_| bad())?;
    let d = num_traits::pow(BigInt::from(10), fp.len());
    let v = BigRational::new(n, d);
    Ok(if neg { -v } else { v })
}

/// Parses polynomials in `x` as printed by [`IntPolynomial`]'s `Display`,
/// e.g. `x^3 + x^2 - 2*x - 1`.
pub fn parse_polynomial(s: &str) -> Result<IntPolynomial, ParseError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ParseError::new("empty polynomial"));
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut terms: Vec<(bool, &str)> = Vec::new();
    let mut start = 0;
    let mut neg = false;
    let bytes = compact.as_bytes();
    for i in 0..=bytes.len() {
        if i == bytes.len() || (i > start && (bytes[i] == b'+' || bytes[i] == b'-')) {
            terms.push((neg, &compact[start..i]));
            if i < bytes.len() {
                neg = bytes[i] == b'-';
                start = i + 1;
            }
        } else if i == start && (bytes[i] == b'+' || bytes[i] == b'-') {
            neg = bytes[i] == b'-';
            start = i + 1;
        }
    }
    for (neg, term) in terms {
        let bad = || ParseError::new(format!("bad polynomial term `{term}`"));
        let (coef, power) = match term.split_once('x') {
            None => (term.parse::<BigInt>().map_err(|_| bad())?, 0usize),
            Some((c, rest)) => {
                let c = c.strip_suffix('*').unwrap_or(c);
                let coef = if c.is_empty() {
                    BigInt::from(1)
                } else {
                    c.parse::<BigInt>().map_err(|_| bad())?
                };
                let power = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(bad)?
                };
                (coef, power)
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigInt::zero());
        }
        coeffs[power] += if neg { -coef } else { coef };
    }
    Ok(IntPolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::isolate_real_roots;

    #[test]
    fn display_forms() {
        assert_eq!(ExactValue::from_int(-3).to_string(), "-3");
        let r = ExactValue::Rational(BigRational::new((-62).into(), 129.into()));
        assert_eq!(r.to_string(), "-62/129");
        let c = isolate_real_roots(&IntPolynomial::from_i64(&[-1, -2, 1, 1]));
        let v = ExactValue::from_algebraic(c[2].clone());
        assert_eq!(v.to_string(), "root(x^3 + x^2 - 2*x - 1, 1.246979603717)");
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "7",
            "-2/7",
            "root(x^3 + x^2 - 2*x - 1, -0.445041867913)",
            "root(x^2 - 5, -2.236067977500)",
        ] {
            let v: ExactValue = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert!("1/0".parse::<ExactValue>().is_err());
        assert_eq!(
            parse_polynomial("-x^2 + 3*x").unwrap(),
            IntPolynomial::from_i64(&[0, 3, -1])
        );
    }

    #[test]
    fn ordering_mixes_kinds() {
        let s2: ExactValue = "root(x^2 - 2, 1.414213562373)".parse().unwrap();
        assert!(ExactValue::from_int(1) < s2);
        assert!(s2 < ExactValue::from_int(2));
        assert_eq!(s2.sign(), 1);
    }
}
