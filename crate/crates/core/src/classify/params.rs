use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Violation};
use crate::exactnum::{isolate_real_roots, Elem, ExactValue, IntPolynomial, Tower};
use crate::spectral::IntersectionArray;

/// `beta = (theta_0 - theta_3) / (theta_1 - theta_2) - 1`.
pub fn beta_of(theta: [&ExactValue; 4]) -> Result<ExactValue, Error> {
    let (mut t, e) = Tower::with_values(&theta.map(Clone::clone));
    let den = t.sub(&e[1], &e[2]);
    let num = t.sub(&e[0], &e[3]);
    let ratio = t
        .div(&num, &den)
        .ok_or_else(|| Error::Domain("beta needs theta_1 != theta_2".into()))?;
    let b = t.sub(&ratio, &t.one());
    Ok(t.to_exact(&b))
}

/// `T_0 = 2`, `T_1 = x`, `T_{i+1} = x T_i - T_{i-1}`, so that
/// `T_i(q + 1/q) = q^i + q^-i`.
pub fn chebyshev_t(i: usize) -> IntPolynomial {
    let mut prev = IntPolynomial::from_i64(&[2]);
    let mut cur = IntPolynomial::x();
    if i == 0 {
        return prev;
    }
    for _ in 1..i {
        let next = &(&IntPolynomial::x() * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The `(q, s)` parametrization of an almost-bipartite Q-polynomial graph
/// of diameter `d`. Nothing is validated until a formula is evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QSParameters {
    pub q: ExactValue,
    /// Real; rational whenever `q` is, otherwise usually in `Q(q)`.
    pub s: ExactValue,
    pub d: usize,
}

impl QSParameters {
    pub fn new(q: impl Into<ExactValue>, s: impl Into<ExactValue>, d: usize) -> Self {
        QSParameters {
            q: q.into(),
            s: s.into(),
            d,
        }
    }

    pub fn rational(q: BigRational, s: BigRational, d: usize) -> Self {
        Self::new(q, s, d)
    }

    /// First violated restriction among `q != 0`, `q^i != 1`,
    /// `s q^i != 1` and `s q^i != -1`, if any.
    pub fn violation(&self) -> Option<Violation> {
        let mut f = QsField::new(self);
        f.violation()
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.d < 3 {
            return Err(Error::Domain(format!(
                "the parametrization needs D >= 3, got {}",
                self.d
            )));
        }
        match self.violation() {
            Some(v) => Err(Error::Excluded(v)),
            None => Ok(()),
        }
    }
}

/// `h`, `k`, `c_1..c_D` and `theta_0..theta_D` at given `(q, s, D)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QSValues {
    pub h: ExactValue,
    pub k: ExactValue,
    /// `c[i-1] = c_i`.
    pub c: Vec<ExactValue>,
    pub theta: Vec<ExactValue>,
}

/// `Q(q, s)` with handy powers.
pub(crate) struct QsField {
    pub t: Tower,
    pub q: Elem,
    pub s: Elem,
    pub d: usize,
}

impl QsField {
    pub fn new(p: &QSParameters) -> Self {
        let (t, e) = Tower::with_values(&[p.q.clone(), p.s.clone()]);
        let mut e = e.into_iter();
        QsField {
            t,
            q: e.next().unwrap(),
            s: e.next().unwrap(),
            d: p.d,
        }
    }

    /// `q^i` for `i >= 0`.
    pub fn qp(&self, i: usize) -> Elem {
        self.t.pow(&self.q, i as u32)
    }

    /// `1 + s q^i`.
    pub fn one_plus_sq(&self, i: usize) -> Elem {
        let sq = self.t.mul_full(&self.s, &self.qp(i));
        self.t.add(&self.t.one(), &sq)
    }

    pub fn div(&mut self, a: &Elem, b: &Elem) -> Elem {
        self.t
            .div(a, b)
            .expect("denominator excluded by the parameter restrictions")
    }

    pub fn is_zero(&mut self, a: &Elem) -> bool {
        self.t.is_zero(a)
    }

    pub fn violation(&mut self) -> Option<Violation> {
        let d = self.d;
        let q = self.q.clone();
        if self.is_zero(&q) {
            return Some(Violation {
                constraint: "q != 0",
                index: None,
            });
        }
        for i in 1..=2 * d {
            let v = self.t.sub(&self.qp(i), &self.t.one());
            if self.is_zero(&v) {
                return Some(Violation {
                    constraint: "q^i != 1",
                    index: Some(i),
                });
            }
        }
        for i in 2..=2 * d {
            let sq = self.t.mul_full(&self.s, &self.qp(i));
            let v = self.t.sub(&sq, &self.t.one());
            if self.is_zero(&v) {
                return Some(Violation {
                    constraint: "s q^i != 1",
                    index: Some(i),
                });
            }
        }
        for i in 1..=2 * d + 1 {
            let v = self.one_plus_sq(i);
            if self.is_zero(&v) {
                return Some(Violation {
                    constraint: "s q^i != -1",
                    index: Some(i),
                });
            }
        }
        None
    }

    /// `h = (q - q^{2D}) / ((q - 1)(1 + s q^{2D+1}))`.
    pub fn h(&mut self) -> Elem {
        let d = self.d;
        let num = self.t.sub(&self.q, &self.qp(2 * d));
        let qm1 = self.t.sub(&self.q, &self.t.one());
        let den = self.t.mul_full(&qm1, &self.one_plus_sq(2 * d + 1));
        self.div(&num, &den)
    }

    /// `(h, k, c_1..c_D, theta_0..theta_D)` as field elements.
    pub fn values(&mut self) -> (Elem, Elem, Vec<Elem>, Vec<Elem>) {
        let d = self.d;
        let h = self.h();
        let k = self.t.mul_full(&h, &self.one_plus_sq(1));
        let mut c = Vec::with_capacity(d);
        for i in 1..=d {
            let one_minus = self.t.sub(&self.t.one(), &self.qp(i));
            let num = self.t.mul_full(
                &self.t.mul_full(&h, &one_minus),
                &self.one_plus_sq(2 * d + 2 - i),
            );
            let inner = self.t.sub(&self.qp(2 * d - 2 * i + 1), &self.t.one());
            let den = self.t.mul_full(&self.qp(i), &inner);
            c.push(self.div(&num, &den));
        }
        let mut theta = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let num = self.t.mul_full(&h, &self.one_plus_sq(2 * i + 1));
            let qi = self.qp(i);
            theta.push(self.div(&num, &qi));
        }
        (h, k, c, theta)
    }
}

/// Evaluates `h`, `k`, `c_i` and `theta_i` after checking every
/// restriction on `(q, s)`.
pub fn qs_evaluate(p: &QSParameters) -> Result<QSValues, Error> {
    p.validate()?;
    let mut f = QsField::new(p);
    let (h, k, c, theta) = f.values();
    let t = &mut f.t;
    Ok(QSValues {
        h: t.to_exact(&h),
        k: t.to_exact(&k),
        c: c.iter().map(|e| t.to_exact(e)).collect(),
        theta: theta.iter().map(|e| t.to_exact(e)).collect(),
    })
}

/// `theta_D = (q^{1-D} - q^D) / (q - 1)`.
pub fn theta_d_closed_form(q: &ExactValue, d: usize) -> Result<ExactValue, Error> {
    let (mut t, e) = Tower::with_values(std::slice::from_ref(q));
    let q = &e[0];
    let qd = t.pow(q, d as u32);
    let qd1 = t.pow(q, d as u32 - 1);
    let inv = t.inv(&qd1).ok_or({
        Error::Excluded(Violation {
            constraint: "q != 0",
            index: None,
        })
    })?;
    let num = t.sub(&inv, &qd);
    let den = t.sub(q, &t.one());
    let v = t.div(&num, &den).ok_or({
        Error::Excluded(Violation {
            constraint: "q^i != 1",
            index: Some(1),
        })
    })?;
    Ok(t.to_exact(&v))
}

/// `q + 1/q`.
pub fn beta_from_q(q: &ExactValue) -> Result<ExactValue, Error> {
    let (mut t, e) = Tower::with_values(std::slice::from_ref(q));
    let inv = t.inv(&e[0]).ok_or({
        Error::Excluded(Violation {
            constraint: "q != 0",
            index: None,
        })
    })?;
    let b = t.add(&e[0], &inv);
    Ok(t.to_exact(&b))
}

/// The root of `x^2 - beta x + 1` with `|q| > 1`.
pub fn q_from_beta(beta: &ExactValue) -> Result<ExactValue, Error> {
    let two = ExactValue::from_int(2);
    if beta == &two {
        return Err(Error::Excluded(Violation {
            constraint: "q^i != 1",
            index: Some(1),
        }));
    }
    if beta == &two.neg() {
        return Err(Error::Excluded(Violation {
            constraint: "q^i != 1",
            index: Some(2),
        }));
    }
    if beta < &two && beta > &two.neg() {
        return Err(Error::Domain(format!(
            "|beta| < 2 makes q non-real (beta = {beta})"
        )));
    }
    // x^n f(x + 1/x) for the defining polynomial f of beta
    let f = beta.to_algebraic().defining_polynomial();
    let n = f.degree().unwrap_or(0);
    let x2p1 = IntPolynomial::from_i64(&[1, 0, 1]);
    let mut g = IntPolynomial::zero();
    for (j, c) in f.coeffs().iter().enumerate() {
        let term = x2p1.pow(j as u32).shift(n - j).scale(c);
        g = &g + &term;
    }
    for r in isolate_real_roots(&g) {
        let v = ExactValue::from_algebraic(r);
        let one = ExactValue::from_int(1);
        if (v > one || v < one.neg()) && &beta_from_q(&v)? == beta {
            return Ok(v);
        }
    }
    unreachable!("x^2 - beta x + 1 has a root outside the unit interval when |beta| > 2")
}

/// Solves `k = h(1 + s q)` for `s`, with `h` from the parametrization.
pub fn solve_s(k: &ExactValue, q: &ExactValue, d: usize) -> Result<ExactValue, Error> {
    let (mut t, e) = Tower::with_values(&[k.clone(), q.clone()]);
    let (k, q) = (&e[0], &e[1]);
    let q2d = t.pow(q, 2 * d as u32);
    let qm1 = t.sub(q, &t.one());
    let top = t.sub(q, &q2d);
    // s (k (q-1) q^{2D+1} - q (q - q^{2D})) = (q - q^{2D}) - k (q-1)
    let a = t.sub(
        &t.mul_full(&t.mul_full(k, &qm1), &t.mul_full(&q2d, q)),
        &t.mul_full(q, &top),
    );
    let b = t.sub(&top, &t.mul_full(k, &qm1));
    let s = t
        .div(&b, &a)
        .ok_or_else(|| Error::Domain("the equation for s is degenerate at this q".into()))?;
    Ok(t.to_exact(&s))
}

/// Recovers `s` from `k` and checks that `(q, s)` reproduces every `c_i`
/// of the array.
pub fn s_from_array(arr: &IntersectionArray, q: &ExactValue) -> Result<ExactValue, Error> {
    let d = arr.diameter();
    let s = solve_s(&ExactValue::from_int(arr.k()), q, d)?;
    let vals = qs_evaluate(&QSParameters::new(q.clone(), s.clone(), d))?;
    for i in 1..=d {
        let want = ExactValue::from_int(arr.c(i));
        if vals.c[i - 1] != want {
            return Err(Error::Domain(format!(
                "array not in parametrized family for this q: c{i} = {want} but the parametrization gives {}",
                vals.c[i - 1]
            )));
        }
    }
    Ok(s)
}
