use drg_spectra::classify::{
    classify, d3_family, eta_of, q_from_beta, s_from_array, sieve, QSParameters, RecordVerdict,
    Verdict,
};
use drg_spectra::exactnum::ExactValue;
use drg_spectra::graphs::{construct_family, intersection_array, Family};
use drg_spectra::spectral::IntersectionArray;
use drg_spectra::Error;

fn family_array(f: Family, n: usize) -> IntersectionArray {
    let g = construct_family(f, n).unwrap();
    intersection_array(&g, false)
        .unwrap()
        .array()
        .unwrap()
        .clone()
}

#[test]
fn family_instances_classify_as_their_family() {
    let cases = [
        (Family::Cycle, 7, Verdict::Cycle(3)),
        (Family::Cycle, 9, Verdict::Cycle(4)),
        (Family::Cycle, 11, Verdict::Cycle(5)),
        (Family::Odd, 7, Verdict::OddGraph(3)),
        (Family::Odd, 9, Verdict::OddGraph(4)),
        (Family::Odd, 11, Verdict::OddGraph(5)),
        (Family::Odd, 13, Verdict::OddGraph(6)),
        (Family::FoldedCube, 7, Verdict::FoldedCube(3)),
        (Family::FoldedCube, 9, Verdict::FoldedCube(4)),
        (Family::FoldedCube, 11, Verdict::FoldedCube(5)),
        (Family::FoldedCube, 13, Verdict::FoldedCube(6)),
    ];
    for (f, n, want) in cases {
        let c = classify(&family_array(f, n)).unwrap();
        assert_eq!(c.verdict, want, "{f}({n})");
        assert!(!c.orderings.is_empty());
    }
}

#[test]
fn bipartite_and_small_diameter_inputs() {
    let c = classify(&family_array(Family::Hypercube, 5)).unwrap();
    assert_eq!(c.verdict, Verdict::NotAlmostBipartite);
    // the Petersen graph is almost bipartite with D = 2
    assert!(matches!(
        classify(&family_array(Family::Odd, 5)),
        Err(Error::Parameter(_))
    ));
}

#[test]
fn sieve_survivors_classify_as_family_points() {
    let records = sieve(-6, -3, 30, false).unwrap();
    let survivors: Vec<_> = records
        .iter()
        .filter(|r| r.verdict == RecordVerdict::D3Family)
        .collect();
    assert!(!survivors.is_empty());
    for r in survivors {
        let c = classify(r.array.as_ref().unwrap()).unwrap();
        assert_eq!(
            c.verdict,
            Verdict::D3Family {
                beta: ExactValue::from_int(r.beta),
                mu: r.mu
            }
        );
        assert!(c.flags.unwrap().iter().all(|f| f.pass == Some(true)));
    }
}

#[test]
fn family_point_recovers_its_q_and_s() {
    let p = d3_family(&ExactValue::from_int(-3), 1).unwrap();
    let arr = p.array.unwrap();
    let q = q_from_beta(&ExactValue::from_int(-3)).unwrap();
    let s = s_from_array(&arr, &q).unwrap();
    assert!(QSParameters::new(q.clone(), s, 3).validate().is_ok());
    let eta = eta_of(&q, 3).unwrap();
    assert!(eta.identity_holds);
    assert_eq!(eta.eta, ExactValue::from_int(-6));
}

#[test]
fn cycle_beta_is_outside_the_parametrized_range() {
    let c = classify(&family_array(Family::Cycle, 7)).unwrap();
    for (beta, _) in c.beta_mu_pairs() {
        assert!(
            matches!(q_from_beta(&beta), Err(Error::Domain(_))),
            "{beta}"
        );
    }
}
