use super::Graph;
use crate::error::Error;
use crate::exactnum::{integer_charpoly, isolate_real_roots, ExactValue};

pub const DEFAULT_SPECTRUM_CAP: usize = 512;

/// Exact adjacency spectrum as `(eigenvalue, multiplicity)`, eigenvalues
/// descending.
pub fn graph_spectrum(g: &Graph) -> Result<Vec<(ExactValue, usize)>, Error> {
    graph_spectrum_with_cap(g, DEFAULT_SPECTRUM_CAP)
}

pub fn graph_spectrum_with_cap(g: &Graph, cap: usize) -> Result<Vec<(ExactValue, usize)>, Error> {
    if g.n() > cap {
        return Err(Error::CapExceeded { n: g.n(), cap });
    }
    let chi = integer_charpoly(&g.adjacency_matrix());
    let mut out: Vec<(ExactValue, usize)> = Vec::new();
    for (factor, mult) in chi.square_free_decomposition() {
        for r in isolate_real_roots(&factor) {
            out.push((ExactValue::from_algebraic(r), mult));
        }
    }
    // symmetric matrices have only real eigenvalues
    if out.iter().map(|(_, m)| m).sum::<usize>() != g.n() {
        return Err(Error::NonRealEigenvalue);
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, construct_family, Family};

    fn ints(s: &[(ExactValue, usize)]) -> Vec<(i64, usize)> {
        s.iter().map(|(e, m)| (e.as_i64().unwrap(), *m)).collect()
    }

    #[test]
    fn complete_and_odd() {
        assert_eq!(
            ints(&graph_spectrum(&complete_graph(4)).unwrap()),
            vec![(3, 1), (-1, 3)]
        );
        let odd7 = construct_family(Family::Odd, 7).unwrap();
        assert_eq!(
            ints(&graph_spectrum(&odd7).unwrap()),
            vec![(4, 1), (2, 14), (-1, 14), (-3, 6)]
        );
    }

    #[test]
    fn heptagon_is_irrational() {
        let s = graph_spectrum(&construct_family(Family::Cycle, 7).unwrap()).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s[0], (ExactValue::from_int(2), 1));
        assert!(s[1..].iter().all(|(e, m)| *m == 2 && !e.is_integer()));
    }

    #[test]
    fn cap_is_enforced() {
        let g = construct_family(Family::Cycle, 20).unwrap();
        assert!(matches!(
            graph_spectrum_with_cap(&g, 10),
            Err(Error::CapExceeded { n: 20, cap: 10 })
        ));
    }
}
