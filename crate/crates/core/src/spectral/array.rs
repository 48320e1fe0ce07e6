use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError};
use crate::exactnum::IntPolynomial;

/// `{b0,...,b_{D-1}; c1,...,cD}` of a (putative) distance-regular graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntersectionArray {
    b: Vec<i64>,
    c: Vec<i64>,
}

impl IntersectionArray {
    /// Checks only the shape: equally long, nonempty sequences.
    pub fn new(b: Vec<i64>, c: Vec<i64>) -> Result<Self, Error> {
        if b.is_empty() || b.len() != c.len() {
            return Err(Error::InvalidArray(format!(
                "need D >= 1 entries on each side, got {} and {}",
                b.len(),
                c.len()
            )));
        }
        Ok(IntersectionArray { b, c })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn k(&self) -> i64 {
        self.b[0]
    }

    /// `b_i` for `0 <= i <= D`, with `b_D = 0`.
    pub fn b(&self, i: usize) -> i64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` for `0 <= i <= D`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    pub fn a(&self, i: usize) -> i64 {
        self.k() - self.b(i) - self.c(i)
    }

    pub fn b_seq(&self) -> &[i64] {
        &self.b
    }

    pub fn c_seq(&self) -> &[i64] {
        &self.c
    }

    pub fn a_seq(&self) -> Vec<i64> {
        (0..=self.diameter()).map(|i| self.a(i)).collect()
    }

    /// Sphere sizes `k_i = k_{i-1} b_{i-1} / c_i`, exact.
    pub fn sizes(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::one()];
        for i in 1..=self.diameter() {
            let prev = out[i - 1].clone();
            out.push(
                prev * BigRational::from_integer(self.b(i - 1).into())
                    / BigRational::from_integer(self.c(i).into()),
            );
        }
        out
    }

    pub fn vertex_count(&self) -> BigRational {
        self.sizes()
            .into_iter()
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Violations of `c1 = 1`, `b_i >= 1`, `c_i >= 1`, `a_i >= 0`.
    pub fn basic_violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        if self.c[0] != 1 {
            v.push(format!("c1 = {} (must be 1)", self.c[0]));
        }
        for (i, &b) in self.b.iter().enumerate() {
            if b < 1 {
                v.push(format!("b{i} = {b} < 1"));
            }
        }
        for (i, &c) in self.c.iter().enumerate() {
            if c < 1 {
                v.push(format!("c{} = {c} < 1", i + 1));
            }
        }
        for i in 0..=self.diameter() {
            if self.a(i) < 0 {
                v.push(format!("a{i} = {} < 0", self.a(i)));
            }
        }
        v
    }

    /// Violations of `b0 >= b1 >= ...` and `c1 <= c2 <= ...`.
    pub fn monotonicity_violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        for i in 1..self.b.len() {
            if self.b[i] > self.b[i - 1] {
                v.push(format!(
                    "b{} = {} > b{} = {}",
                    i,
                    self.b[i],
                    i - 1,
                    self.b[i - 1]
                ));
            }
            if self.c[i] < self.c[i - 1] {
                v.push(format!(
                    "c{} = {} < c{} = {}",
                    i + 1,
                    self.c[i],
                    i,
                    self.c[i - 1]
                ));
            }
        }
        v
    }

    /// Passes the basic invariants, or names every violation.
    pub fn check_basic(&self) -> Result<(), Error> {
        let v = self.basic_violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidArray(v.join("; ")))
        }
    }

    /// Basic invariants plus monotonicity.
    pub fn check_feasible(&self) -> Result<(), Error> {
        let mut v = self.basic_violations();
        v.extend(self.monotonicity_violations());
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidArray(v.join("; ")))
        }
    }

    /// `a_i = 0` for `i < D` and `a_D != 0`.
    pub fn is_almost_bipartite(&self) -> bool {
        let d = self.diameter();
        (0..d).all(|i| self.a(i) == 0) && self.a(d) != 0
    }

    /// `p_0..=p_{D+1}` with `p_0 = 1`, `p_1 = x`,
    /// `p_{i+1} = (x - a_i) p_i - b_{i-1} c_i p_{i-1}`. The last one is the
    /// characteristic polynomial of the intersection matrix.
    pub fn recurrence_polynomials(&self) -> Vec<IntPolynomial> {
        let d = self.diameter();
        let mut ps = vec![IntPolynomial::one(), IntPolynomial::x()];
        for i in 1..=d {
            let lin = IntPolynomial::from_i64(&[-self.a(i), 1]);
            let bc = BigInt::from(self.b(i - 1)) * BigInt::from(self.c(i));
            let next = &(&lin * &ps[i]) - &ps[i - 1].scale(&bc);
            ps.push(next);
        }
        // p_1 should be x - a_0 in general; a_0 = k - b_0 = 0 always
        debug_assert_eq!(self.a(0), 0);
        ps
    }

    pub fn characteristic_polynomial(&self) -> IntPolynomial {
        self.recurrence_polynomials().pop().unwrap()
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| {
                ParseError::new(format!(
                    "intersection array must look like {{b0,..;c1,..}}: `{t}`"
                ))
            })?;
        let (b, c) = inner
            .split_once(';')
            .ok_or_else(|| ParseError::new("intersection array needs a `;` between b and c"))?;
        let nums = |part: &str| -> Result<Vec<i64>, ParseError> {
            part.split(',')
                .map(|x| {
                    x.trim().parse::<i64>().map_err(|_| {
                        ParseError::new(format!("bad integer `{}` in intersection array", x.trim()))
                    })
                })
                .collect()
        };
        IntersectionArray::new(nums(b)?, nums(c)?).map_err(|e| ParseError::new(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_derive() {
        let a: IntersectionArray = "{4,3,3;1,1,2}".parse().unwrap();
        assert_eq!(a.to_string(), "{4,3,3;1,1,2}");
        assert_eq!(a.a_seq(), vec![0, 0, 0, 2]);
        let sizes: Vec<_> = a.sizes().iter().map(|s| s.to_integer()).collect();
        assert_eq!(sizes, vec![1.into(), 4.into(), 12.into(), 18.into()]);
        assert_eq!(a.vertex_count(), BigRational::from_integer(35.into()));
        assert!(a.is_almost_bipartite());
        assert!(" { 2 , 1 ; 1 , 1 } ".parse::<IntersectionArray>().is_ok());
        assert!("{2,1;1}".parse::<IntersectionArray>().is_err());
        assert!("2,1;1,1".parse::<IntersectionArray>().is_err());
    }

    #[test]
    fn almost_bipartite_flags() {
        let cube7: IntersectionArray = "{7,6,5,4,3,2,1;1,2,3,4,5,6,7}".parse().unwrap();
        assert!(!cube7.is_almost_bipartite());
        let pentagon: IntersectionArray = "{2,1;1,1}".parse().unwrap();
        assert!(pentagon.is_almost_bipartite());
        assert_eq!(pentagon.diameter(), 2);
    }

    #[test]
    fn violations_are_named() {
        let bad = IntersectionArray::new(vec![3, 4], vec![2, 1]).unwrap();
        let v = bad.basic_violations();
        assert!(v.iter().any(|s| s.starts_with("c1 = 2")));
        assert!(bad
            .check_feasible()
            .unwrap_err()
            .to_string()
            .contains("b1 = 4 > b0 = 3"));
    }

    #[test]
    fn characteristic_polynomial_of_odd7() {
        let a: IntersectionArray = "{4,3,3;1,1,2}".parse().unwrap();
        // (x - 4)(x - 2)(x + 1)(x + 3)
        assert_eq!(
            a.characteristic_polynomial(),
            IntPolynomial::from_roots(&[4, 2, -1, -3])
        );
    }
}
