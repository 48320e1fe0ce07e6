use drg_spectra::classify::{
    beta_from_q, beta_of, candidate, parse_record, qs_evaluate, QSParameters,
};
use drg_spectra::exactnum::{frac, ExactValue, Tower};
use drg_spectra::spectral::{spectrum, IntersectionArray};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn feasible_array() -> impl Strategy<Value = IntersectionArray> {
    (2usize..=3, 2i64..=8, prop::collection::vec(0i64..8, 6)).prop_filter_map(
        "infeasible",
        |(d, k, steps)| {
            let mut b = vec![k];
            let mut c = vec![1];
            for i in 1..d {
                b.push(b[i - 1] - steps[i] % b[i - 1]);
                c.push(c[i - 1] + steps[i + 3] % (k - c[i - 1] + 1));
            }
            IntersectionArray::new(b, c)
                .ok()
                .filter(|a| a.check_feasible().is_ok())
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn arrays_round_trip_through_text(arr in feasible_array()) {
        let back: IntersectionArray = arr.to_string().parse().unwrap();
        prop_assert_eq!(back, arr);
    }

    #[test]
    fn multiplicities_sum_to_n_and_trace_vanishes(arr in feasible_array()) {
        let sd = spectrum(&arr).unwrap();
        // formal multiplicities may be irrational; sum them exactly
        let (mut t, ms) = Tower::with_values(&sd.multiplicities);
        let total = ms.iter().fold(t.zero(), |acc, m| t.add(&acc, m));
        prop_assert_eq!(t.to_exact(&total), ExactValue::Rational(sd.vertex_count().clone()));
        prop_assert!(sd.verify_identities());
        if sd.eigenvalues.iter().all(|e| e.as_rational().is_some()) {
            let trace: BigRational = sd
                .eigenvalues
                .iter()
                .zip(&sd.multiplicities)
                .map(|(e, m)| e.as_rational().unwrap() * m.as_rational().unwrap())
                .sum();
            prop_assert!(trace.is_zero());
        }
    }

    #[test]
    fn beta_of_parametrized_eigenvalues(qn in -12i64..=12, qd in 1i64..=5, sn in -12i64..=12, sd in 1i64..=5, d in 3usize..=5) {
        let p = QSParameters::rational(frac(qn, qd), frac(sn, sd), d);
        prop_assume!(p.violation().is_none());
        let v = qs_evaluate(&p).unwrap();
        let t = &v.theta;
        prop_assert_eq!(beta_of([&t[0], &t[1], &t[2], &t[3]]).unwrap(), beta_from_q(&p.q).unwrap());
    }

    #[test]
    fn exact_order_matches_rational_order(a in -50i64..50, b in 1i64..20, c in -50i64..50, e in 1i64..20) {
        let (x, y) = (frac(a, b), frac(c, e));
        prop_assert_eq!(ExactValue::Rational(x.clone()).cmp(&ExactValue::Rational(y.clone())), x.cmp(&y));
        let parsed: ExactValue = ExactValue::Rational(x.clone()).to_string().parse().unwrap();
        prop_assert_eq!(parsed, ExactValue::Rational(x));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn sieve_records_round_trip(beta in -9i64..=-3, mu in 1i64..=25) {
        let rec = candidate(beta, mu).unwrap();
        prop_assert_eq!(parse_record(&rec.to_string()).unwrap(), rec);
    }
}
