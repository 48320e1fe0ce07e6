//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial over `Z`, coefficients stored lowest degree first.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient
/// is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - a`.
    pub fn linear_root(a: i64) -> Self {
        Self::from_i64(&[-a, 1])
    }

    /// Smallest integer polynomial `den*x - num` vanishing at `r`.
    pub fn from_rational_root(r: &BigRational) -> Self {
        Self::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    /// Product of `x - r` over the given roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, &r| &acc * &Self::linear_root(r))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let (num, den) = (x.numer(), x.denom());
        let d = self.coeffs.len() - 1;
        BigRational::new(
            self.homogeneous_eval(num, den),
            num_traits::pow(den.clone(), d),
        )
    }

    /// `den^deg * p(num/den)` as an exact integer.
    fn homogeneous_eval(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        // c_i picks up den^(d-i)
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc
    }

    /// Sign of `p(x)` as -1, 0 or 1.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let v = self.homogeneous_eval(x.numer(), x.denom());
        sign_of(&v)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * other) + &Self::constant(c.clone())
        })
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`, with the
    /// multiplier's sign folded out so the result has the sign of a true
    /// remainder scaled by a positive constant.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        assert!(!b.is_zero(), "pseudo-remainder by zero polynomial");
        let db = b.coeffs.len() - 1;
        let lb = b.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return self.clone();
        }
        let steps = r.len() - db;
        while r.len() > db {
            let lr = r.last().cloned().unwrap();
            let shift = r.len() - 1 - db;
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[i + shift] -= &lr * bc;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        let mut out = IntPolynomial::new(r);
        if lb.is_negative() && steps % 2 == 1 {
            out = -out;
        }
        out
    }

    /// Exact division in `Z[x]`; `None` if `b` does not divide `self`.
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        assert!(!b.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let db = b.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return None;
        }
        let lb = b.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len() - db];
        while r.len() > db {
            let lr = r.last().cloned().unwrap();
            let (quot, rem) = lr.div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            let shift = r.len() - 1 - db;
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[i + shift] -= &quot * bc;
            }
            q[shift] = quot;
            r.pop();
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    /// Gcd in `Z[x]` by the primitive remainder sequence; primitive with
    /// positive leading coefficient (the zero polynomial if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = if self.coeffs.len() >= other.coeffs.len() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&content)
    }

    /// Square-free part, primitive.
    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g.primitive_part())
            .expect("gcd divides polynomial")
            .primitive_part()
    }

    /// Yun's square-free decomposition: returns `(f_i, i)` with
    /// `primitive(self) = prod f_i^i` up to sign, skipping constant factors.
    pub fn square_free_decomposition(&self) -> Vec<(IntPolynomial, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.primitive_part();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = fp.div_exact(&a0).expect("gcd divides derivative");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.primitive_part(), i));
            }
            b = b.div_exact(&a).expect("gcd divides");
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_exact(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Sturm sequence `p, p', -rem(p, p'), ...` with positive scalings only.
    pub fn sturm_sequence(&self) -> Vec<IntPolynomial> {
        let mut seq = vec![self.clone()];
        if self.degree().unwrap_or(0) == 0 {
            return seq;
        }
        seq.push(self.derivative());
        loop {
            let n = seq.len();
            let r = seq[n - 2].pseudo_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            let mut g = r.content();
            if g.is_zero() {
                g = BigInt::one();
            }
            seq.push(IntPolynomial::new(
                r.coeffs.iter().map(|c| -(c / &g)).collect(),
            ));
        }
        seq
    }

    /// Cauchy-style bound: every real root has absolute value below the
    /// returned power of two.
    pub fn root_bound_pow2(&self) -> u64 {
        let lead = self.leading().abs();
        let max = self
            .coeffs
            .iter()
            .take(self.coeffs.len().saturating_sub(1))
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        // 1 + max/lead < 2^e
        let ratio = BigRational::new(max, lead) + BigRational::one();
        let mut e = 0u64;
        let mut p = BigRational::one();
        while p <= ratio {
            p *= BigRational::from_integer(BigInt::from(2));
            e += 1;
        }
        e
    }

    /// Formats with the given variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

pub(crate) fn sign_of(v: &BigInt) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn eval_matches_naive() {
        let f = p(&[-1, -2, 1, 1]);
        for (n, d) in [(0, 1), (3, 2), (-7, 3), (5, 1)] {
            let x = q(n, d);
            let naive = f
                .coeffs()
                .iter()
                .enumerate()
                .fold(BigRational::zero(), |acc, (i, c)| {
                    acc + BigRational::from_integer(c.clone()) * num_traits::pow(x.clone(), i)
                });
            assert_eq!(f.eval(&x), naive);
            assert_eq!(f.sign_at(&x), sign_of(&(naive.numer() * naive.denom())));
        }
    }

    #[test]
    fn gcd_and_exact_division() {
        let a = &p(&[-1, 1]) * &p(&[2, 0, 1]); // (x-1)(x^2+2)
        let b = &p(&[-1, 1]) * &p(&[3, 1]); // (x-1)(x+3)
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[2, 0, 1])));
        assert_eq!(a.div_exact(&p(&[3, 1])), None);
    }

    #[test]
    fn square_free_decomposition_recovers_powers() {
        let f = &(&p(&[-2, 1]).pow(3) * &p(&[1, 0, 1]).pow(2)) * &p(&[5, 1]);
        let mut dec = f.square_free_decomposition();
        dec.sort_by_key(|(_, i)| *i);
        assert_eq!(dec.len(), 3);
        assert_eq!(dec[0], (p(&[5, 1]), 1));
        assert_eq!(dec[1], (p(&[1, 0, 1]), 2));
        assert_eq!(dec[2], (p(&[-2, 1]), 3));
        assert_eq!(
            f.square_free_part(),
            &(&p(&[-2, 1]) * &p(&[1, 0, 1])) * &p(&[5, 1])
        );
    }

    #[test]
    fn compose_and_display() {
        let t2 = p(&[-2, 0, 1]);
        assert_eq!(t2.to_string(), "x^2 - 2");
        let shifted = t2.compose(&p(&[1, 1]));
        assert_eq!(shifted, p(&[-1, 2, 1]));
        assert_eq!(p(&[-1, -2, 1, 1]).to_string(), "x^3 + x^2 - 2*x - 1");
    }
}
