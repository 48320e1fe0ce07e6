use serde::Serialize;

use super::params::{QSParameters, QsField};
use crate::error::{Error, Violation};
use crate::exactnum::{Elem, ExactValue, Tower};
use crate::spectral::IntersectionArray;

/// `(c_2 - 1) theta^2 - (k - c_2)(k - 2)`. Zero means `theta` is an
/// eigenvalue of the kind a 2-homogeneous bipartite double would need.
pub fn curtin_gap(arr: &IntersectionArray, theta: &ExactValue) -> ExactValue {
    let c2 = if arr.diameter() >= 2 { arr.c(2) } else { 0 };
    curtin_gap_values(
        &ExactValue::from_int(arr.k()),
        &ExactValue::from_int(c2),
        theta,
    )
}

/// [`curtin_gap`] for arbitrary exact `k`, `c_2`.
pub fn curtin_gap_values(k: &ExactValue, c2: &ExactValue, theta: &ExactValue) -> ExactValue {
    let (mut t, e) = Tower::with_values(&[k.clone(), c2.clone(), theta.clone()]);
    let (k, c2, th) = (&e[0], &e[1], &e[2]);
    let left = t.mul_full(&t.sub(c2, &t.one()), &t.mul_full(th, th));
    let right = t.mul_full(&t.sub(k, c2), &t.sub(k, &t.int(2)));
    let v = t.sub(&left, &right);
    t.to_exact(&v)
}

/// Closed form of `curtin_gap(theta_D)` in terms of `(q, s)`:
/// `(q^{2D}-1)(q^{2D}-q^2)(q^{2D}-q)^2(s^2 q^{2D+3}-1)` over
/// `q^{2D}(q-1)^2(q^{2D}-q^3)(1+s q^{2D+1})^2`. It vanishes exactly when
/// `s^2 q^{2D+3} = 1`.
pub fn curtin_gap_closed_form(p: &QSParameters) -> Result<ExactValue, Error> {
    p.validate()?;
    let mut f = QsField::new(p);
    let d = p.d;
    let t = &f.t;
    let q2d = f.qp(2 * d);
    let one = t.one();
    let s2q = t.mul_full(&t.mul_full(&f.s, &f.s), &f.qp(2 * d + 3));
    let num = [
        t.sub(&q2d, &one),
        t.sub(&q2d, &f.qp(2)),
        t.pow(&t.sub(&q2d, &f.q), 2),
        t.sub(&s2q, &one),
    ]
    .iter()
    .fold(one.clone(), |a, b| t.mul_full(&a, b));
    let den = [
        q2d.clone(),
        t.pow(&t.sub(&f.q, &one), 2),
        t.sub(&q2d, &f.qp(3)),
        t.pow(&f.one_plus_sq(2 * d + 1), 2),
    ]
    .iter()
    .fold(one.clone(), |a, b| t.mul_full(&a, b));
    let v = f.div(&num, &den);
    Ok(f.t.to_exact(&v))
}

/// `s^2 q^{2D+3} != 1`.
pub fn s2q_condition_holds(p: &QSParameters) -> bool {
    let mut f = QsField::new(p);
    let t = &f.t;
    let v = t.sub(
        &t.mul_full(&t.mul_full(&f.s, &f.s), &f.qp(2 * p.d + 3)),
        &t.one(),
    );
    !f.t.is_zero(&v)
}

/// The multiplicity of the irreducible module with endpoint 2, dual
/// endpoint 2 and diameter `D - 2`, with the restrictions that would make
/// it vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleMultiplicity {
    pub value: ExactValue,
    /// Numerator factors that vanish, as the restrictions they break.
    pub zero_factors: Vec<Violation>,
}

impl ModuleMultiplicity {
    pub fn is_nonzero(&self) -> bool {
        !self.value.is_zero()
    }
}

/// Evaluates
/// `(q^{2D}-1)(q^{2D}-q^2)(1+sq)(1+sq^4)(s^2q^{2D+3}-1)` over
/// `q(q+1)(q-1)^2(s^2q^{2D+4}-1)(1+sq^{2D})(1+sq^{2D+1})`.
/// A vanishing denominator factor is an error naming that factor.
pub fn module_multiplicity(p: &QSParameters) -> Result<ModuleMultiplicity, Error> {
    let mut f = QsField::new(p);
    let d = p.d;
    let one = f.t.one();
    let q2d = f.qp(2 * d);
    let s2 = f.t.mul_full(&f.s, &f.s);
    let den_factors: Vec<(&'static str, Elem)> = vec![
        ("q", f.q.clone()),
        ("q + 1", f.t.add(&f.q, &one)),
        ("(q - 1)^2", f.t.pow(&f.t.sub(&f.q, &one), 2)),
        (
            "s^2 q^(2D+4) - 1",
            f.t.sub(&f.t.mul_full(&s2, &f.qp(2 * d + 4)), &one),
        ),
        ("1 + s q^(2D)", f.one_plus_sq(2 * d)),
        ("1 + s q^(2D+1)", f.one_plus_sq(2 * d + 1)),
    ];
    let num_factors: Vec<(Violation, Elem)> = vec![
        (
            Violation {
                constraint: "q^i != 1",
                index: Some(2 * d),
            },
            f.t.sub(&q2d, &one),
        ),
        (
            Violation {
                constraint: "q^i != 1",
                index: Some(2 * d - 2),
            },
            f.t.sub(&q2d, &f.qp(2)),
        ),
        (
            Violation {
                constraint: "s q^i != -1",
                index: Some(1),
            },
            f.one_plus_sq(1),
        ),
        (
            Violation {
                constraint: "s q^i != -1",
                index: Some(4),
            },
            f.one_plus_sq(4),
        ),
        (
            Violation {
                constraint: "s^2 q^(2D+3) != 1",
                index: None,
            },
            f.t.sub(&f.t.mul_full(&s2, &f.qp(2 * d + 3)), &one),
        ),
    ];
    let mut den = one.clone();
    for (name, e) in &den_factors {
        if f.t.is_zero(e) {
            return Err(Error::Domain(format!(
                "module multiplicity denominator factor {name} vanishes"
            )));
        }
        den = f.t.mul_full(&den, e);
    }
    let mut num = one;
    let mut zero_factors = Vec::new();
    for (v, e) in num_factors {
        if f.t.is_zero(&e) {
            zero_factors.push(v);
        }
        num = f.t.mul_full(&num, &e);
    }
    let value = f.div(&num, &den);
    Ok(ModuleMultiplicity {
        value: f.t.to_exact(&value),
        zero_factors,
    })
}
