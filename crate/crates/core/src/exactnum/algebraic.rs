//! Real algebraic numbers as a defining polynomial plus an isolating interval.
//!
//! Roots are isolated with Sturm sequences over exact rationals. Every
//! rational root is recognised during isolation and stored exactly, so an
//! [`AlgebraicReal`] with a defining polynomial of degree at least two is
//! always irrational. Interval endpoints are dyadic rationals.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::interval::Interval;
use super::poly::IntPolynomial;

#[derive(Clone, Debug)]
enum Repr {
    Rational(BigRational),
    /// `poly` is square-free without rational roots, exactly one root lies
    /// in the open interval `(lo, hi)`, and neither endpoint is a root.
    Irrational {
        poly: IntPolynomial,
        lo: BigRational,
        hi: BigRational,
    },
}

#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    repr: Repr,
}

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

fn pow2(e: u64) -> BigRational {
    BigRational::from_integer(num_traits::pow(BigInt::from(2), e as usize))
}

/// Number of sign variations of the Sturm sequence at `x` (zeros skipped).
fn variations(seq: &[IntPolynomial], x: &BigRational) -> usize {
    let mut last = 0;
    let mut count = 0;
    for p in seq {
        let s = p.sign_at(x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Square-free `p` only: number of distinct roots in the open interval
/// `(a, b)`, valid when neither endpoint is a root.
fn count_between(seq: &[IntPolynomial], a: &BigRational, b: &BigRational) -> usize {
    variations(seq, a) - variations(seq, b)
}

struct Isolator {
    poly: IntPolynomial,
    seq: Vec<IntPolynomial>,
    rational: Vec<BigRational>,
    intervals: Vec<(BigRational, BigRational)>,
}

impl Isolator {
    fn run(&mut self, a: BigRational, b: BigRational) {
        let mut stack = vec![(a, b)];
        while let Some((a, b)) = stack.pop() {
            let n = count_between(&self.seq, &a, &b);
            if n == 0 {
                continue;
            }
            if n == 1 {
                self.intervals.push((a, b));
                continue;
            }
            let m = (&a + &b) / two();
            if self.poly.sign_at(&m) != 0 {
                stack.push((a, m.clone()));
                stack.push((m, b));
                continue;
            }
            // m is a rational root; find non-root neighbours isolating it.
            self.rational.push(m.clone());
            let mut delta = (&b - &a) / BigRational::from_integer(BigInt::from(4));
            loop {
                let m1 = &m - &delta;
                let m2 = &m + &delta;
                if self.poly.sign_at(&m1) != 0
                    && self.poly.sign_at(&m2) != 0
                    && count_between(&self.seq, &m1, &m2) == 1
                {
                    stack.push((a.clone(), m1));
                    stack.push((m2, b.clone()));
                    break;
                }
                delta /= two();
            }
        }
    }
}

/// Exact rational root of `poly` inside `(lo, hi)` if there is one; the
/// interval must isolate a single root. Uses the fact that any rational root
/// has the form `j / lc` for an integer `j`.
fn rational_root_in(
    poly: &IntPolynomial,
    lo: &mut BigRational,
    hi: &mut BigRational,
) -> Option<BigRational> {
    let lc = BigRational::from_integer(poly.leading().abs());
    let slo = poly.sign_at(lo);
    while (&*hi - &*lo) * &lc >= BigRational::one() {
        let m = (&*lo + &*hi) / two();
        let s = poly.sign_at(&m);
        if s == 0 {
            return Some(m);
        }
        if s == slo {
            *lo = m;
        } else {
            *hi = m;
        }
    }
    let j = (&*lo * &lc).ceil();
    let candidate = j / lc;
    if &candidate < hi && poly.sign_at(&candidate) == 0 {
        Some(candidate)
    } else {
        None
    }
}

/// All distinct real roots of `p` in ascending order.
///
/// Rational roots come back with a degree-one defining polynomial; the
/// irrational ones share the square-free part of `p` with its rational
/// linear factors divided out.
pub fn isolate_real_roots(p: &IntPolynomial) -> Vec<AlgebraicReal> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sqf = p.square_free_part();
    let seq = sqf.sturm_sequence();
    let bound = pow2(sqf.root_bound_pow2());
    let mut iso = Isolator {
        poly: sqf.clone(),
        seq,
        rational: Vec::new(),
        intervals: Vec::new(),
    };
    iso.run(-bound.clone(), bound);

    let mut rational = iso.rational;
    let mut irrational = Vec::new();
    for (mut lo, mut hi) in iso.intervals {
        match rational_root_in(&sqf, &mut lo, &mut hi) {
            Some(r) => rational.push(r),
            None => irrational.push((lo, hi)),
        }
    }
    let mut reduced = sqf;
    for r in &rational {
        reduced = reduced
            .div_exact(&IntPolynomial::from_rational_root(r))
            .expect("rational root factor divides")
            .primitive_part();
    }
    let mut out: Vec<AlgebraicReal> = rational
        .into_iter()
        .map(AlgebraicReal::from_rational)
        .chain(irrational.into_iter().map(|(lo, hi)| AlgebraicReal {
            repr: Repr::Irrational {
                poly: reduced.clone(),
                lo,
                hi,
            },
        }))
        .collect();
    out.sort_by(|a, b| a.lower().cmp(b.lower()));
    out
}

impl AlgebraicReal {
    pub fn from_rational(r: BigRational) -> Self {
        AlgebraicReal {
            repr: Repr::Rational(r),
        }
    }

    pub fn from_integer(i: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(i)))
    }

    /// The unique root of `p` in the open interval `(lo, hi)`, if there is
    /// exactly one and neither endpoint is a root.
    pub fn root_in(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> Option<Self> {
        if p.is_zero() || p.sign_at(lo) == 0 || p.sign_at(hi) == 0 || lo >= hi {
            return None;
        }
        let window = Interval::new(lo.clone(), hi.clone());
        let mut found = None;
        for mut r in isolate_real_roots(p) {
            if r.settle_membership(&window) {
                if found.is_some() {
                    return None;
                }
                found = Some(r);
            }
        }
        found
    }

    /// The root of `p` closest to the approximation `approx`; ties resolve
    /// to the smaller root.
    pub fn root_near(p: &IntPolynomial, approx: &BigRational) -> Option<Self> {
        let mut roots = isolate_real_roots(p);
        if roots.is_empty() {
            return None;
        }
        for r in roots.iter_mut() {
            r.refine(&BigRational::new(BigInt::one(), BigInt::from(1u64 << 50)));
        }
        roots.into_iter().min_by(|a, b| {
            let da = (a.midpoint() - approx).abs();
            let db = (b.midpoint() - approx).abs();
            da.cmp(&db)
        })
    }

    /// Decides whether the number lies inside the closed interval `w`,
    /// refining as needed. `w`'s endpoints must not equal the number unless
    /// it is rational.
    fn settle_membership(&mut self, w: &Interval) -> bool {
        loop {
            match &self.repr {
                Repr::Rational(r) => return w.contains(r),
                Repr::Irrational { lo, hi, .. } => {
                    if lo >= &w.lo && hi <= &w.hi {
                        return true;
                    }
                    if hi <= &w.lo || lo >= &w.hi {
                        return false;
                    }
                }
            }
            self.bisect();
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.repr, Repr::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(r) => Some(r),
            Repr::Irrational { .. } => None,
        }
    }

    /// The integer value, if the number is an integer. Irrational values
    /// never have rational roots in their defining polynomial, so this never
    /// reports a wrong integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// Defining polynomial: `den*x - num` for rationals.
    pub fn defining_polynomial(&self) -> IntPolynomial {
        match &self.repr {
            Repr::Rational(r) => IntPolynomial::from_rational_root(r),
            Repr::Irrational { poly, .. } => poly.clone(),
        }
    }

    pub fn degree(&self) -> usize {
        match &self.repr {
            Repr::Rational(_) => 1,
            Repr::Irrational { poly, .. } => poly.degree().unwrap_or(0),
        }
    }

    pub fn lower(&self) -> &BigRational {
        match &self.repr {
            Repr::Rational(r) => r,
            Repr::Irrational { lo, .. } => lo,
        }
    }

    pub fn upper(&self) -> &BigRational {
        match &self.repr {
            Repr::Rational(r) => r,
            Repr::Irrational { hi, .. } => hi,
        }
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.lower().clone(), self.upper().clone())
    }

    pub fn midpoint(&self) -> BigRational {
        (self.lower() + self.upper()) / two()
    }

    /// Halves the isolating interval.
    pub fn bisect(&mut self) {
        let Repr::Irrational { poly, lo, hi } = &mut self.repr else {
            return;
        };
        let m = (&*lo + &*hi) / two();
        let s = poly.sign_at(&m);
        if s == 0 {
            // Unreachable for canonical values; keep the exact root anyway.
            self.repr = Repr::Rational(m);
            return;
        }
        if s == poly.sign_at(lo) {
            *lo = m;
        } else {
            *hi = m;
        }
    }

    /// Shrinks the isolating interval below width `eps` and returns it.
    /// Rational values return the degenerate interval `[r, r]`.
    pub fn refine(&mut self, eps: &BigRational) -> Interval {
        assert!(eps.is_positive(), "refinement width must be positive");
        while self.upper() - self.lower() >= *eps {
            self.bisect();
        }
        self.interval()
    }

    pub fn sign(&self) -> i32 {
        match &self.repr {
            Repr::Rational(r) => {
                if r.is_zero() {
                    0
                } else if r.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Repr::Irrational { .. } => {
                let mut c = self.clone();
                loop {
                    if c.lower() >= &BigRational::zero() {
                        return 1;
                    }
                    if c.upper() <= &BigRational::zero() {
                        return -1;
                    }
                    c.bisect();
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut c = self.clone();
        let eps = BigRational::new(BigInt::one(), BigInt::from(1u64 << 60));
        c.refine(&eps);
        c.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal approximation with `digits` places after the point.
    pub fn decimal(&self, digits: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10), digits);
        let mut c = self.clone();
        let eps = BigRational::new(BigInt::one(), &scale * BigInt::from(10));
        c.refine(&eps);
        format_decimal(&c.midpoint(), digits)
    }

    /// Exact equality test: intervals that overlap are resolved through the
    /// gcd of the defining polynomials.
    fn equals(&self, other: &Self) -> bool {
        match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => a == b,
            (Repr::Rational(_), _) | (_, Repr::Rational(_)) => false,
            (
                Repr::Irrational {
                    poly: pa,
                    lo: la,
                    hi: ha,
                },
                Repr::Irrational {
                    poly: pb,
                    lo: lb,
                    hi: hb,
                },
            ) => {
                let lo = la.max(lb);
                let hi = ha.min(hb);
                if lo >= hi {
                    return false;
                }
                let g = pa.gcd(pb);
                if g.degree().unwrap_or(0) == 0 {
                    return false;
                }
                // A root of g in both isolating intervals is both numbers.
                let w = Interval::new(lo.clone(), hi.clone());
                isolate_real_roots(&g)
                    .into_iter()
                    .any(|mut r| r.settle_membership(&w))
            }
        }
    }

    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        if self.equals(other) {
            return Ordering::Equal;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
                return x.cmp(y);
            }
            // Irrational values lie strictly inside their intervals.
            if a.upper() <= b.lower() {
                return Ordering::Less;
            }
            if b.upper() <= a.lower() {
                return Ordering::Greater;
            }
            a.bisect();
            b.bisect();
        }
    }

    pub fn neg(&self) -> Self {
        match &self.repr {
            Repr::Rational(r) => Self::from_rational(-r.clone()),
            Repr::Irrational { poly, lo, hi } => AlgebraicReal {
                repr: Repr::Irrational {
                    poly: poly.reflect().primitive_part(),
                    lo: -hi.clone(),
                    hi: -lo.clone(),
                },
            },
        }
    }
}

/// Rounds `v` to `digits` decimal places (half away from zero).
pub(crate) fn format_decimal(v: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = v * BigRational::from_integer(scale.clone());
    let neg = scaled.is_negative();
    let a = scaled.abs();
    let (q, r) = a.numer().div_rem(a.denom());
    let rounded = if BigInt::from(2) * r >= *a.denom() {
        q + 1
    } else {
        q
    };
    let (ip, fp) = rounded.div_rem(&scale);
    let mut s = String::new();
    if neg && !rounded.is_zero() {
        s.push('-');
    }
    s.push_str(&ip.to_string());
    if digits > 0 {
        s.push('.');
        let f = fp.to_string();
        s.push_str(&"0".repeat(digits - f.len()));
        s.push_str(&f);
    }
    s
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(r) => write!(f, "{r}"),
            Repr::Irrational { poly, .. } => {
                write!(f, "root({}, {})", poly, self.decimal(12))
            }
        }
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
    fn linear_root() {
        let r = isolate_real_roots(&p(&[-3, 1]));
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].as_integer(), Some(BigInt::from(3)));
    }

    #[test]
    fn sqrt_two_pair_excludes_zero() {
        let r = isolate_real_roots(&p(&[-2, 0, 1]));
        assert_eq!(r.len(), 2);
        assert!(r[0].upper() <= &BigRational::zero());
        assert!(r[1].lower() >= &BigRational::zero());
        assert!(r[0].as_integer().is_none());
        assert!((r[1].to_f64() - 2f64.sqrt()).abs() < 1e-15);
        assert!((r[0].to_f64() + 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn heptagon_cubic_roots() {
        let r = isolate_real_roots(&p(&[-1, -2, 1, 1]));
        let expect: Vec<f64> = [3, 2, 1]
            .iter()
            .map(|&j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / 7.0).cos())
            .collect();
        assert_eq!(r.len(), 3);
        for (a, e) in r.iter().zip(&expect) {
            assert!((a.to_f64() - e).abs() < 1e-12, "{a} vs {e}");
        }
        // pinned from a 50-digit numeric root finder
        assert!((r[0].to_f64() + 1.8019377358048383).abs() < 1e-15);
        assert!((r[1].to_f64() + 0.4450418679126288).abs() < 1e-15);
        assert!((r[2].to_f64() - 1.246_979_603_717_467).abs() < 1e-15);
    }

    #[test]
    fn refine_sqrt_two() {
        let mut r = isolate_real_roots(&p(&[-2, 0, 1])).pop().unwrap();
        let iv = r.refine(&q(1, 100));
        assert!(iv.width() < q(1, 100));
        assert!(iv.contains(&q(14142, 10000)));
        // dyadic endpoints: one more halving of the width lands inside (1.41, 1.42)
        let tight = r.refine(&q(1, 200));
        assert!(tight.lo > q(141, 100) && tight.hi < q(142, 100));
        assert!(iv.lo <= tight.lo && tight.hi <= iv.hi);
    }

    #[test]
    fn refine_rational_is_degenerate() {
        let mut r = AlgebraicReal::from_integer(3);
        let iv = r.refine(&q(1, 1000));
        assert_eq!(iv.lo, q(3, 1));
        assert_eq!(iv.hi, q(3, 1));
    }

    #[test]
    fn refine_heptagon_root() {
        let mut r = isolate_real_roots(&p(&[-1, -2, 1, 1])).pop().unwrap();
        let iv = r.refine(&q(1, 1_000_000));
        assert!(iv.contains(&q(1_246_979, 1_000_000)) || iv.lo > q(1_246_979, 1_000_000));
        assert!(iv.hi < q(1_246_980, 1_000_000));
        assert_eq!(r.decimal(12), "1.246979603717");
    }

    #[test]
    fn golden_q_is_not_integer() {
        let r = AlgebraicReal::root_in(&p(&[1, 3, 1]), &q(-27, 10), &q(-25, 10)).unwrap();
        assert!(r.as_integer().is_none());
        assert!(!r.is_rational());
    }

    #[test]
    fn rational_roots_recognised_with_leading_coefficient() {
        // (3x - 2)(x^2 - 5)(2x + 7)
        let f = &(&p(&[-2, 3]) * &p(&[-5, 0, 1])) * &p(&[7, 2]);
        let r = isolate_real_roots(&f);
        assert_eq!(r.len(), 4);
        assert_eq!(r[0].as_rational(), Some(&q(-7, 2)));
        assert_eq!(r[2].as_rational(), Some(&q(2, 3)));
        assert_eq!(r[1].defining_polynomial(), p(&[-5, 0, 1]));
    }

    #[test]
    fn midpoint_root_is_caught() {
        // roots 0 and +-1 hit bisection midpoints directly
        let r = isolate_real_roots(&p(&[0, -1, 0, 1]));
        let ints: Vec<_> = r.iter().map(|a| a.as_integer().unwrap()).collect();
        assert_eq!(
            ints,
            vec![BigInt::from(-1), BigInt::from(0), BigInt::from(1)]
        );
    }

    #[test]
    fn ordering_and_equality() {
        let a = isolate_real_roots(&p(&[-2, 0, 1]));
        // same number, different defining polynomial: (x^2-2)(x^2-3)
        let b = isolate_real_roots(&p(&[6, 0, -5, 0, 1]));
        assert_eq!(a[1], b[2]);
        assert!(a[1] < b[3]);
        assert!(a[0] > b[0]);
        assert!(AlgebraicReal::from_integer(1) < a[1]);
        assert_eq!(a[1].neg(), a[0]);
        assert_eq!(a[0].sign(), -1);
    }
}
