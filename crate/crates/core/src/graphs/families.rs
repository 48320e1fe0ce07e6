use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, ParseError};

/// Largest vertex count a family construction will produce.
pub const MAX_FAMILY_VERTICES: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// The `n`-gon.
    Cycle,
    /// The `n`-dimensional hypercube.
    Hypercube,
    /// The folded `n`-cube: `n`-bit strings modulo complementation.
    FoldedCube,
    /// The Odd graph on an `n`-set.
    Odd,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Cycle => "cycle",
            Family::Hypercube => "hypercube",
            Family::FoldedCube => "folded_cube",
            Family::Odd => "odd",
        })
    }
}

impl FromStr for Family {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "cycle" | "polygon" => Ok(Family::Cycle),
            "hypercube" | "cube" => Ok(Family::Hypercube),
            "folded_cube" | "foldedcube" => Ok(Family::FoldedCube),
            "odd" | "odd_graph" => Ok(Family::Odd),
            other => Err(ParseError::new(format!(
                "unknown family `{other}` (expected cycle, hypercube, folded_cube or odd)"
            ))),
        }
    }
}

fn check_size(count: u128) -> Result<usize, Error> {
    if count > MAX_FAMILY_VERTICES as u128 {
        return Err(Error::CapExceeded {
            n: usize::try_from(count).unwrap_or(usize::MAX),
            cap: MAX_FAMILY_VERTICES,
        });
    }
    Ok(count as usize)
}

fn binomial(n: u32, k: u32) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn bits(x: usize, len: usize) -> String {
    (0..len)
        .rev()
        .map(|i| if x >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Builds a labelled member of a family. `n` is the cycle length, cube
/// dimension, or ground-set size.
pub fn construct_family(family: Family, n: usize) -> Result<Graph, Error> {
    let odd_at_least_5 = |what: &str| {
        if n < 5 || n.is_multiple_of(2) {
            Err(Error::Parameter(format!(
                "{what} needs odd n >= 5, got {n}"
            )))
        } else {
            Ok(())
        }
    };
    match family {
        Family::Cycle => {
            if n < 3 {
                return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
            }
            check_size(n as u128)?;
            let adj = (0..n)
                .map(|v| {
                    let mut nb = vec![(v + 1) % n, (v + n - 1) % n];
                    nb.sort_unstable();
                    nb
                })
                .collect();
            Graph::from_sorted_adjacency(adj).with_labels((0..n).map(|v| v.to_string()).collect())
        }
        Family::Hypercube => {
            if n < 1 {
                return Err(Error::Parameter("hypercube needs dimension >= 1".into()));
            }
            if n >= 64 {
                return Err(Error::CapExceeded {
                    n: usize::MAX,
                    cap: MAX_FAMILY_VERTICES,
                });
            }
            let count = check_size(1u128 << n)?;
            let adj = (0..count)
                .map(|x| {
                    let mut nb: Vec<usize> = (0..n).map(|i| x ^ (1 << i)).collect();
                    nb.sort_unstable();
                    nb
                })
                .collect();
            Graph::from_sorted_adjacency(adj).with_labels((0..count).map(|x| bits(x, n)).collect())
        }
        Family::FoldedCube => {
            odd_at_least_5("folded cube")?;
            if n >= 64 {
                return Err(Error::CapExceeded {
                    n: usize::MAX,
                    cap: MAX_FAMILY_VERTICES,
                });
            }
            // representatives have top bit 0; flipping the top bit and
            // complementing gives the flip of all other n-1 bits
            let count = check_size(1u128 << (n - 1))?;
            let low = count - 1;
            let adj = (0..count)
                .map(|x| {
                    let mut nb: Vec<usize> = (0..n - 1).map(|i| x ^ (1 << i)).collect();
                    nb.push(x ^ low);
                    nb.sort_unstable();
                    nb
                })
                .collect();
            Graph::from_sorted_adjacency(adj).with_labels((0..count).map(|x| bits(x, n)).collect())
        }
        Family::Odd => {
            odd_at_least_5("Odd graph")?;
            let r = (n - 1) / 2;
            if n > 40 {
                return Err(Error::CapExceeded {
                    n: usize::MAX,
                    cap: MAX_FAMILY_VERTICES,
                });
            }
            check_size(binomial(n as u32, r as u32))?;
            let subsets: Vec<u64> = (0u64..1 << n)
                .filter(|s| s.count_ones() as usize == r)
                .collect();
            // the neighbours of s are the complement minus one element
            let full = (1u64 << n) - 1;
            let adj = subsets
                .iter()
                .map(|&s| {
                    let comp = full ^ s;
                    let mut nb: Vec<usize> = (0..n)
                        .filter(|i| comp >> i & 1 == 1)
                        .map(|i| {
                            subsets
                                .binary_search(&(comp ^ (1 << i)))
                                .expect("r-subset is listed")
                        })
                        .collect();
                    nb.sort_unstable();
                    nb
                })
                .collect();
            let labels = subsets
                .iter()
                .map(|&s| {
                    let el: Vec<String> = (0..n)
                        .filter(|i| s >> i & 1 == 1)
                        .map(|i| i.to_string())
                        .collect();
                    format!("{{{}}}", el.join(","))
                })
                .collect();
            Graph::from_sorted_adjacency(adj).with_labels(labels)
        }
    }
}

/// The complete graph `K_n`.
pub fn complete_graph(n: usize) -> Graph {
    let adj = (0..n)
        .map(|u| (0..n).filter(|&v| v != u).collect())
        .collect();
    Graph::from_sorted_adjacency(adj)
}

/// The bipartite double: `x+` is vertex `x`, `x-` is vertex `n + x`, and
/// `x+ ~ y-` exactly when `x ~ y`.
pub fn bipartite_double(g: &Graph) -> Graph {
    let n = g.n();
    let mut adj = Vec::with_capacity(2 * n);
    for x in 0..n {
        adj.push(g.neighbors(x).iter().map(|&y| n + y).collect());
    }
    for x in 0..n {
        adj.push(g.neighbors(x).to_vec());
    }
    let labels = (0..n)
        .map(|x| format!("{}+", g.label(x)))
        .chain((0..n).map(|x| format!("{}-", g.label(x))))
        .collect();
    Graph::from_sorted_adjacency(adj)
        .with_labels(labels)
        .expect("label count matches")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let c7 = construct_family(Family::Cycle, 7).unwrap();
        assert_eq!((c7.n(), c7.regularity()), (7, Some(2)));
        let odd7 = construct_family(Family::Odd, 7).unwrap();
        assert_eq!(
            (odd7.n(), odd7.regularity(), odd7.num_edges()),
            (35, Some(4), 70)
        );
        let fc7 = construct_family(Family::FoldedCube, 7).unwrap();
        assert_eq!(
            (fc7.n(), fc7.regularity(), fc7.num_edges()),
            (64, Some(7), 224)
        );
        let q3 = construct_family(Family::Hypercube, 3).unwrap();
        assert_eq!((q3.n(), q3.regularity()), (8, Some(3)));
        assert_eq!(odd7.label(0), "{0,1,2}");
        assert_eq!(fc7.label(1), "0000001");
    }

    #[test]
    fn parameter_errors() {
        assert!(construct_family(Family::Cycle, 2).is_err());
        assert!(construct_family(Family::Hypercube, 0).is_err());
        assert!(construct_family(Family::FoldedCube, 6).is_err());
        assert!(construct_family(Family::FoldedCube, 3).is_err());
        assert!(construct_family(Family::Odd, 8).is_err());
        assert!(matches!(
            construct_family(Family::Hypercube, 30),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn family_names_parse() {
        for f in [
            Family::Cycle,
            Family::Hypercube,
            Family::FoldedCube,
            Family::Odd,
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert_eq!("folded-cube".parse::<Family>().unwrap(), Family::FoldedCube);
        assert!("petersen".parse::<Family>().is_err());
    }

    #[test]
    fn double_labels_and_bipartiteness() {
        let c5 = construct_family(Family::Cycle, 5).unwrap();
        let d = bipartite_double(&c5);
        assert_eq!(d.n(), 10);
        assert!(d.is_bipartite());
        assert!(d.has_edge(0, 6));
        assert_eq!(d.label(6), "1-");
        let k4 = complete_graph(4);
        assert_eq!(k4.num_edges(), 6);
    }
}
