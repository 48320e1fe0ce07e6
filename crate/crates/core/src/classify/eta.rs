use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::curtin::{curtin_gap_values, s2q_condition_holds};
use super::params::{beta_from_q, qs_evaluate, QSParameters};
use crate::error::{Error, Violation};
use crate::exactnum::{Elem, ExactValue, Tower};
use crate::graphs::{graph_spectrum, local_graph_g22, Graph};

/// `eta`, `xi = eta + beta^2 - 1` and the checks attached to them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EtaReport {
    pub eta: ExactValue,
    pub beta: ExactValue,
    /// `eta + beta^2 - 1`.
    pub xi: ExactValue,
    /// `(q^{2D} - q^9) / (q^{2D+2} - q^7)`.
    pub xi_closed_form: ExactValue,
    pub identity_holds: bool,
    pub beta_integral: bool,
    pub eta_integral: bool,
    /// `(c_2 - 1) theta_i^2 != (k - c_2)(k - 2)` for `1 <= i <= D`; only
    /// known when `s` is.
    pub curtin_holds: Option<bool>,
    /// `s^2 q^{2D+3} != 1`; only known when `s` is.
    pub s2q_holds: Option<bool>,
}

fn excluded(constraint: &'static str, index: Option<usize>) -> Error {
    Error::Excluded(Violation { constraint, index })
}

/// `eta = -(q^2 + 1)(q^{2D} - q^3) / (q^{2D} - q^5)` in the field of `q`.
fn eta_elem(t: &mut Tower, q: &Elem, d: usize) -> Result<Elem, Error> {
    let q2d = t.pow(q, 2 * d as u32);
    let num = t.mul_full(&t.add(&t.pow(q, 2), &t.one()), &t.sub(&q2d, &t.pow(q, 3)));
    let den = t.sub(&q2d, &t.pow(q, 5));
    let v = t
        .div(&num, &den)
        .ok_or_else(|| excluded("q^i != 1", Some(2 * d - 5)))?;
    Ok(t.neg(&v))
}

fn xi_closed_elem(t: &mut Tower, q: &Elem, d: usize) -> Result<Elem, Error> {
    let q2d = t.pow(q, 2 * d as u32);
    let num = t.sub(&q2d, &t.pow(q, 9));
    let den = t.sub(&t.pow(q, 2 * d as u32 + 2), &t.pow(q, 7));
    t.div(&num, &den)
        .ok_or_else(|| excluded("q^i != 1", Some(2 * d - 5)))
}

fn check_q(t: &mut Tower, q: &Elem, d: usize) -> Result<(), Error> {
    if d < 3 {
        return Err(Error::Domain(format!("eta needs D >= 3, got {d}")));
    }
    if t.is_zero(q) {
        return Err(excluded("q != 0", None));
    }
    for i in 1..=2 * d {
        let v = t.sub(&t.pow(q, i as u32), &t.one());
        if t.is_zero(&v) {
            return Err(excluded("q^i != 1", Some(i)));
        }
    }
    Ok(())
}

/// `eta` and `xi` at `(q, D)`, with `xi` computed both from `eta` and from
/// its closed form.
pub fn eta_of(q: &ExactValue, d: usize) -> Result<EtaReport, Error> {
    let (mut t, e) = Tower::with_values(std::slice::from_ref(q));
    let q = &e[0];
    check_q(&mut t, q, d)?;
    let eta = eta_elem(&mut t, q, d)?;
    let qinv = t.inv(q).expect("q is nonzero");
    let beta = t.add(q, &qinv);
    let xi = t.sub(&t.add(&eta, &t.mul_full(&beta, &beta)), &t.one());
    let closed = xi_closed_elem(&mut t, q, d)?;
    let identity_holds = t.equal(&xi, &closed);
    let eta = t.to_exact(&eta);
    let beta = t.to_exact(&beta);
    Ok(EtaReport {
        beta_integral: beta.is_integer(),
        eta_integral: eta.is_integer(),
        eta,
        beta,
        xi: t.to_exact(&xi),
        xi_closed_form: t.to_exact(&closed),
        identity_holds,
        curtin_holds: None,
        s2q_holds: None,
    })
}

/// [`eta_of`] plus the restrictions that need `s`.
pub fn eta_report(p: &QSParameters) -> Result<EtaReport, Error> {
    let mut r = eta_of(&p.q, p.d)?;
    let v = qs_evaluate(p)?;
    let curtin = (1..=p.d).all(|i| !curtin_gap_values(&v.k, &v.c[1], &v.theta[i]).is_zero());
    r.curtin_holds = Some(curtin);
    r.s2q_holds = Some(s2q_condition_holds(p));
    Ok(r)
}

/// `xi` by diameter: `-(beta + 1)` for `D = 3`, `-1/(beta + 1)` for `D = 4`,
/// and `sum_{|i| <= D-5} q^i / sum_{|i| <= D-3} q^i` for `D >= 5`.
pub fn xi_by_diameter(q: &ExactValue, d: usize) -> Result<ExactValue, Error> {
    let beta = beta_from_q(q)?;
    let (mut t, e) = Tower::with_values(&[q.clone(), beta]);
    let (q, b) = (&e[0], &e[1]);
    let b1 = t.add(b, &t.one());
    let v = match d {
        0..=2 => return Err(Error::Domain(format!("xi needs D >= 3, got {d}"))),
        3 => t.neg(&b1),
        4 => {
            let inv = t.inv(&b1).ok_or_else(|| excluded("q^i != 1", Some(3)))?;
            t.neg(&inv)
        }
        _ => {
            let qinv = t.inv(q).ok_or_else(|| excluded("q != 0", None))?;
            let sym = |t: &Tower, m: usize| {
                let mut acc = t.one();
                for i in 1..=m {
                    acc = t.add(&acc, &t.add(&t.pow(q, i as u32), &t.pow(&qinv, i as u32)));
                }
                acc
            };
            let num = sym(&t, d - 5);
            let den = sym(&t, d - 3);
            t.div(&num, &den)
                .ok_or_else(|| excluded("q^i != 1", Some(2 * d - 5)))?
        }
    };
    Ok(t.to_exact(&v))
}

/// Exact rational `eta` for rational `q`; the formula used by the identity
/// suite unless another is injected.
pub fn eta_rational(q: &BigRational, d: usize) -> Option<BigRational> {
    let q2d = num_traits::pow(q.clone(), 2 * d);
    let den = &q2d - num_traits::pow(q.clone(), 5);
    if den.is_zero() {
        return None;
    }
    let num = (q * q + BigRational::one()) * (&q2d - num_traits::pow(q.clone(), 3));
    Some(-(num / den))
}

/// `xi` and the sign value `(q^4 - 1)(q^14 - q^{4D})` for `q^2 > 1`,
/// `D >= 4`. The sign value is negative, which forces `xi^2 < 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct D4Witness {
    #[serde(serialize_with = "super::sieve::ser_display")]
    pub q: BigRational,
    pub d: usize,
    #[serde(serialize_with = "super::sieve::ser_display")]
    pub xi: BigRational,
    #[serde(serialize_with = "super::sieve::ser_display")]
    pub sign_value: BigRational,
    pub xi_squared_below_one: bool,
}

pub fn d4_contradiction_witness(q: &BigRational, d: usize) -> Result<D4Witness, Error> {
    if d < 4 {
        return Err(Error::Domain(format!(
            "the contradiction needs D >= 4, got {d}"
        )));
    }
    if q.abs() <= BigRational::one() {
        return Err(Error::Domain(format!(
            "the contradiction needs q^2 > 1, got q = {q}"
        )));
    }
    let p = |e: usize| num_traits::pow(q.clone(), e);
    let xi = (p(2 * d) - p(9)) / (p(2 * d + 2) - p(7));
    let sign_value = (p(4) - BigRational::one()) * (p(14) - p(4 * d));
    Ok(D4Witness {
        q: q.clone(),
        d,
        xi_squared_below_one: &xi * &xi < BigRational::one(),
        xi,
        sign_value,
    })
}

/// Exploratory: does `eta` occur in the spectrum of the local graph at
/// `x`? Meant for concrete graphs; nothing in the theory supplies one.
pub fn local_graph_has_eigenvalue(g: &Graph, x: usize, eta: &ExactValue) -> Result<bool, Error> {
    let local = local_graph_g22(g, x)?;
    Ok(graph_spectrum(&local)?.iter().any(|(e, _)| e == eta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, rat};

    #[test]
    fn eta_examples() {
        let r = eta_of(&ExactValue::from_int(2), 3).unwrap();
        assert_eq!(r.eta, ExactValue::Rational(frac(-35, 4)));
        assert_eq!(r.beta, ExactValue::Rational(frac(5, 2)));
        assert!(r.identity_holds);
        let r = eta_of(&ExactValue::from_int(2), 4).unwrap();
        assert_eq!(r.xi, ExactValue::Rational(frac(-2, 7)));
        assert_eq!(xi_by_diameter(&ExactValue::from_int(2), 4).unwrap(), r.xi);
        let q = ExactValue::from_int(-3);
        let r = eta_of(&q, 5).unwrap();
        assert!(r.identity_holds);
        // 1 / (q^2 + q + 1 + q^-1 + q^-2) at q = -3
        assert_eq!(r.xi, ExactValue::Rational(frac(9, 61)));
        assert_eq!(xi_by_diameter(&q, 5).unwrap(), r.xi);
        assert!(eta_of(&ExactValue::from_int(1), 3).is_err());
    }

    #[test]
    fn eta_with_irrational_q() {
        let q = super::super::params::q_from_beta(&ExactValue::from_int(-3)).unwrap();
        let r = eta_of(&q, 3).unwrap();
        assert!(r.identity_holds);
        assert_eq!(r.eta, ExactValue::from_int(-6));
        assert!(r.beta_integral && r.eta_integral);
    }

    #[test]
    fn d4_examples() {
        let w = d4_contradiction_witness(&rat(2), 4).unwrap();
        assert_eq!(w.xi, frac(-2, 7));
        assert_eq!(w.sign_value, rat(15) * (rat(1 << 14) - rat(1 << 16)));
        assert!(w.xi_squared_below_one);
        assert!(
            d4_contradiction_witness(&frac(-3, 2), 5)
                .unwrap()
                .xi_squared_below_one
        );
        assert!(
            d4_contradiction_witness(&rat(10), 7)
                .unwrap()
                .xi_squared_below_one
        );
        assert!(d4_contradiction_witness(&frac(1, 2), 5).is_err());
        assert!(d4_contradiction_witness(&rat(2), 3).is_err());
    }

    #[test]
    fn rational_eta_agrees() {
        let r = eta_of(&ExactValue::Rational(frac(7, 3)), 6).unwrap();
        assert_eq!(
            ExactValue::Rational(eta_rational(&frac(7, 3), 6).unwrap()),
            r.eta
        );
    }
}
