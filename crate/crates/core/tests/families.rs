use drg_spectra::exactnum::ExactValue;
use drg_spectra::graphs::{
    are_isomorphic, bipartite_double, complete_graph, construct_family, graph_spectrum,
    intersection_array, parse_edge_list, write_edge_list, DrgReport, Family, Graph,
};
use drg_spectra::spectral::{spectrum, IntersectionArray};

fn array(g: &Graph) -> IntersectionArray {
    match intersection_array(g, false).unwrap() {
        DrgReport::DistanceRegular(a) => a,
        DrgReport::NotDistanceRegular(w) => panic!("not distance-regular: {w:?}"),
    }
}

fn expected(family: Family, n: usize) -> IntersectionArray {
    let (b, c): (Vec<i64>, Vec<i64>) = match family {
        Family::Cycle => {
            let d = n / 2;
            let mut c = vec![1; d];
            if n.is_multiple_of(2) {
                c[d - 1] = 2;
            }
            let mut b = vec![1; d];
            b[0] = 2;
            (b, c)
        }
        Family::Hypercube => (
            (0..n).map(|i| (n - i) as i64).collect(),
            (1..=n as i64).collect(),
        ),
        Family::FoldedCube => {
            let d = n / 2;
            (
                (0..d).map(|i| (n - i) as i64).collect(),
                (1..=d as i64).collect(),
            )
        }
        Family::Odd => {
            let d = n / 2;
            let half_up = |i: usize| i.div_ceil(2) as i64;
            (
                (0..d).map(|i| d as i64 + 1 - half_up(i)).collect(),
                (1..=d).map(half_up).collect(),
            )
        }
    };
    IntersectionArray::new(b, c).unwrap()
}

fn corpus() -> Vec<(Family, usize)> {
    let mut out: Vec<(Family, usize)> = (3..=33).map(|n| (Family::Cycle, n)).collect();
    out.extend([5, 7, 9, 11].map(|n| (Family::Odd, n)));
    out.extend([5, 7, 9].map(|n| (Family::FoldedCube, n)));
    out.extend((1..=9).map(|n| (Family::Hypercube, n)));
    out
}

#[test]
fn every_family_instance_is_distance_regular_with_the_known_array() {
    for (f, n) in corpus() {
        let g = construct_family(f, n).unwrap();
        assert_eq!(array(&g), expected(f, n), "{f}({n})");
    }
}

#[test]
fn strict_check_agrees_on_small_instances() {
    for (f, n) in [
        (Family::Cycle, 9),
        (Family::Odd, 7),
        (Family::FoldedCube, 7),
        (Family::Hypercube, 4),
    ] {
        let g = construct_family(f, n).unwrap();
        let strict = intersection_array(&g, true).unwrap();
        assert_eq!(strict.array(), Some(&expected(f, n)), "{f}({n})");
    }
}

#[test]
fn almost_bipartite_exactly_for_odd_cycles_folded_cubes_and_odd_graphs() {
    for (f, n) in corpus() {
        let arr = array(&construct_family(f, n).unwrap());
        let want = match f {
            Family::Cycle => n % 2 == 1,
            Family::Hypercube => false,
            Family::FoldedCube | Family::Odd => true,
        };
        assert_eq!(arr.is_almost_bipartite(), want, "{f}({n}) {arr}");
    }
    for g in [
        complete_graph(4),
        construct_family(Family::Cycle, 7).unwrap(),
    ] {
        assert!(!array(&bipartite_double(&g)).is_almost_bipartite());
    }
}

#[test]
fn array_spectrum_matches_graph_spectrum() {
    let mut cases: Vec<(Family, usize)> = (3..=15).map(|n| (Family::Cycle, n)).collect();
    cases.extend([5, 7, 9].map(|n| (Family::Odd, n)));
    cases.extend([5, 7, 9].map(|n| (Family::FoldedCube, n)));
    cases.extend((1..=7).map(|n| (Family::Hypercube, n)));
    let mut graphs: Vec<Graph> = cases
        .iter()
        .map(|&(f, n)| construct_family(f, n).unwrap())
        .collect();
    graphs.push(bipartite_double(&construct_family(Family::Odd, 5).unwrap()));
    graphs.push(bipartite_double(&complete_graph(5)));
    for g in graphs {
        let sd = spectrum(&array(&g)).unwrap();
        let from_array: Vec<(ExactValue, ExactValue)> =
            sd.eigenvalues.into_iter().zip(sd.multiplicities).collect();
        let from_graph: Vec<(ExactValue, ExactValue)> = graph_spectrum(&g)
            .unwrap()
            .into_iter()
            .map(|(e, m)| (e, ExactValue::from_int(m as i64)))
            .collect();
        assert_eq!(from_array, from_graph, "{} vertices", g.n());
    }
}

#[test]
fn krein_parameters_of_realizable_arrays_are_nonnegative() {
    for (f, n) in [
        (Family::Cycle, 9),
        (Family::Odd, 9),
        (Family::FoldedCube, 9),
        (Family::Hypercube, 5),
    ] {
        let sd = spectrum(&array(&construct_family(f, n).unwrap())).unwrap();
        assert!(sd.krein_nonnegative(), "{f}({n})");
        assert!(sd.verify_identities(), "{f}({n})");
    }
}

#[test]
fn doubles_match_known_graphs() {
    let k4 = complete_graph(4);
    let q3 = construct_family(Family::Hypercube, 3).unwrap();
    assert!(are_isomorphic(&bipartite_double(&k4), &q3));
    let c7 = construct_family(Family::Cycle, 7).unwrap();
    let c14 = construct_family(Family::Cycle, 14).unwrap();
    assert!(are_isomorphic(&bipartite_double(&c7), &c14));
    assert!(!are_isomorphic(
        &bipartite_double(&c7),
        &construct_family(Family::Cycle, 13).unwrap()
    ));
}

#[test]
fn edge_lists_round_trip() {
    let g = construct_family(Family::Odd, 7).unwrap();
    let back = parse_edge_list(&write_edge_list(&g)).unwrap();
    assert_eq!(back.edges(), g.edges());
}

#[test]
fn non_distance_regular_graph_gets_a_witness() {
    // a 6-cycle with one chord
    let g =
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
    match intersection_array(&g, false).unwrap() {
        DrgReport::NotDistanceRegular(w) => assert_ne!(w.expected, w.found),
        DrgReport::DistanceRegular(a) => panic!("reported {a}"),
    }
}
