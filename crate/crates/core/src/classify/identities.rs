//! Seeded randomized checks of the closed-form identities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::curtin::{curtin_gap_closed_form, curtin_gap_values};
use super::eta::{d4_contradiction_witness, eta_rational, xi_by_diameter};
use super::family::d3_family;
use super::params::{
    beta_from_q, beta_of, chebyshev_t, qs_evaluate, theta_d_closed_form, QSParameters,
};
use crate::exactnum::ExactValue;

/// Outcome of one identity over its samples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub name: String,
    pub samples: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl IdentityResult {
    fn new(name: &str) -> Self {
        IdentityResult {
            name: name.to_string(),
            samples: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.samples += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    /// No failures. Zero samples also pass, vacuously.
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Signature of an `eta(q, D)` formula, so a wrong one can be injected.
pub type EtaFn = fn(&BigRational, usize) -> Option<BigRational>;

fn rng(seed: u64, suite: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ suite.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn random_rational(r: &mut ChaCha8Rng, num: i64, den: i64) -> BigRational {
    BigRational::new(
        BigInt::from(r.gen_range(-num..=num)),
        BigInt::from(r.gen_range(1..=den)),
    )
}

/// A rational `q` with `q^2 != 0, 1`.
fn random_q(r: &mut ChaCha8Rng) -> BigRational {
    loop {
        let q = random_rational(r, 30, 9);
        if !q.is_zero() && q.abs() != BigRational::one() {
            return q;
        }
    }
}

/// Rational `(q, s, D)` satisfying every restriction.
fn random_qs(r: &mut ChaCha8Rng, dmax: usize) -> QSParameters {
    loop {
        let d = r.gen_range(3..=dmax.max(3));
        let p = QSParameters::rational(random_q(r), random_rational(r, 30, 9), d);
        if p.violation().is_none() {
            return p;
        }
    }
}

fn pow(q: &BigRational, e: usize) -> BigRational {
    num_traits::pow(q.clone(), e)
}

/// `eta + beta^2 - 1 = (q^{2D} - q^9) / (q^{2D+2} - q^7)` with `eta` from
/// `eta_fn`.
pub fn check_eta_identity(trials: usize, seed: u64, dmax: usize, eta_fn: EtaFn) -> IdentityResult {
    let mut res = IdentityResult::new("eta_xi");
    let mut r = rng(seed, 1);
    while res.samples < trials {
        let q = random_q(&mut r);
        let d = r.gen_range(3..=dmax.max(3));
        let den = pow(&q, 2 * d + 2) - pow(&q, 7);
        let Some(eta) = eta_fn(&q, d) else { continue };
        if den.is_zero() {
            continue;
        }
        let beta = &q + q.recip();
        let lhs = eta + &beta * &beta - BigRational::one();
        let rhs = (pow(&q, 2 * d) - pow(&q, 9)) / den;
        res.record(lhs == rhs, || format!("q={q} D={d}: {lhs} != {rhs}"));
    }
    res
}

/// `theta_D` from the full parametrization equals its closed form in `q`.
pub fn check_theta_d(trials: usize, seed: u64, dmax: usize) -> IdentityResult {
    let mut res = IdentityResult::new("theta_d");
    let mut r = rng(seed, 2);
    while res.samples < trials {
        let p = random_qs(&mut r, dmax);
        let (Ok(v), Ok(closed)) = (qs_evaluate(&p), theta_d_closed_form(&p.q, p.d)) else {
            continue;
        };
        let ok = v.theta[p.d] == closed;
        res.record(ok, || {
            format!(
                "q={} s={} D={}: {} != {closed}",
                p.q, p.s, p.d, v.theta[p.d]
            )
        });
    }
    res
}

/// `beta` from `theta_0..theta_3` equals `q + 1/q`.
pub fn check_beta(trials: usize, seed: u64, dmax: usize) -> IdentityResult {
    let mut res = IdentityResult::new("beta");
    let mut r = rng(seed, 3);
    while res.samples < trials {
        let p = random_qs(&mut r, dmax);
        let Ok(v) = qs_evaluate(&p) else { continue };
        let th = &v.theta;
        let got = beta_of([&th[0], &th[1], &th[2], &th[3]]);
        let want = beta_from_q(&p.q).expect("q is nonzero");
        let ok = got.as_ref() == Ok(&want);
        res.record(ok, || {
            format!("q={} s={} D={}: {got:?} != {want}", p.q, p.s, p.d)
        });
    }
    res
}

/// The closed form of `(c_2 - 1) theta_D^2 - (k - c_2)(k - 2)` equals the
/// direct evaluation.
pub fn check_curtin(trials: usize, seed: u64, dmax: usize) -> IdentityResult {
    let mut res = IdentityResult::new("curtin");
    let mut r = rng(seed, 4);
    while res.samples < trials {
        let p = random_qs(&mut r, dmax);
        let (Ok(v), Ok(closed)) = (qs_evaluate(&p), curtin_gap_closed_form(&p)) else {
            continue;
        };
        let direct = curtin_gap_values(&v.k, &v.c[1], &v.theta[p.d]);
        res.record(direct == closed, || {
            format!("q={} s={} D={}: {direct} != {closed}", p.q, p.s, p.d)
        });
    }
    res
}

/// `T_i(q + 1/q) = q^i + q^-i` for `0 <= i <= 20`.
pub fn check_chebyshev(trials: usize, seed: u64) -> IdentityResult {
    let mut res = IdentityResult::new("chebyshev");
    let mut r = rng(seed, 5);
    let polys: Vec<_> = (0..=20).map(chebyshev_t).collect();
    while res.samples < trials {
        let q = random_q(&mut r);
        let i = r.gen_range(0..=20usize);
        let got = polys[i].eval(&(&q + q.recip()));
        let want = pow(&q, i) + pow(&q.recip(), i);
        res.record(got == want, || format!("i={i} q={q}"));
    }
    res
}

/// `b_2 = k - mu` on the family, over the grid `-50 <= beta <= 50`,
/// `1 <= mu <= 50`. The grid is exhaustive, so no seed is involved.
pub fn check_b2_grid() -> IdentityResult {
    let mut res = IdentityResult::new("b2_grid");
    for beta in -50..=50 {
        for mu in 1..=50 {
            let p = d3_family(&ExactValue::from_int(beta), mu).expect("mu >= 1");
            res.record(p.b2_consistent, || {
                format!("beta={beta} mu={mu}: b2={} k={}", p.b2, p.k)
            });
        }
    }
    res
}

/// `(q^4 - 1)(q^14 - q^{4D}) < 0` and `xi^2 < 1` for `q^2 > 1`,
/// `4 <= D <= 10`.
pub fn check_d4(trials: usize, seed: u64) -> IdentityResult {
    let mut res = IdentityResult::new("d4_contradiction");
    let mut r = rng(seed, 6);
    while res.samples < trials {
        let q = random_q(&mut r);
        if q.abs() <= BigRational::one() {
            continue;
        }
        let d = r.gen_range(4..=10usize);
        let w = d4_contradiction_witness(&q, d).expect("q^2 > 1 and D >= 4");
        let ok = w.sign_value.is_negative() && w.xi_squared_below_one;
        res.record(ok, || {
            format!("q={q} D={d}: sign value {} xi {}", w.sign_value, w.xi)
        });
    }
    res
}

/// `xi` by diameter equals `eta + beta^2 - 1`.
pub fn check_xi_by_diameter(trials: usize, seed: u64, dmax: usize) -> IdentityResult {
    let mut res = IdentityResult::new("xi_by_diameter");
    let mut r = rng(seed, 7);
    while res.samples < trials {
        let q = random_q(&mut r);
        let d = r.gen_range(3..=dmax.max(3));
        let Some(eta) = eta_rational(&q, d) else {
            continue;
        };
        let Ok(got) = xi_by_diameter(&ExactValue::Rational(q.clone()), d) else {
            continue;
        };
        let beta = &q + q.recip();
        let want = ExactValue::Rational(eta + &beta * &beta - BigRational::one());
        res.record(got == want, || format!("q={q} D={d}: {got} != {want}"));
    }
    res
}

/// Every suite, in a fixed order.
pub fn run_identity_suites(trials: usize, seed: u64, dmax: usize) -> Vec<IdentityResult> {
    vec![
        check_eta_identity(trials, seed, dmax, eta_rational),
        check_theta_d(trials, seed, dmax),
        check_beta(trials, seed, dmax),
        check_curtin(trials, seed, dmax),
        check_chebyshev(trials, seed),
        check_b2_grid(),
        check_d4(trials, seed),
        check_xi_by_diameter(trials, seed, dmax),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wrong_eta(q: &BigRational, d: usize) -> Option<BigRational> {
        eta_rational(q, d).map(|e| e + BigRational::one())
    }

    #[test]
    fn small_runs_pass() {
        for r in run_identity_suites(30, 7, 6) {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn injected_error_is_caught() {
        let r = check_eta_identity(20, 1, 5, wrong_eta);
        assert_eq!(r.failures, 20);
        assert!(r.first_failure.is_some());
    }

    #[test]
    fn zero_trials_pass_vacuously() {
        let r = check_beta(0, 1, 5);
        assert_eq!(r.samples, 0);
        assert!(r.passed());
    }
}
