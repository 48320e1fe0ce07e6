use rayon::prelude::*;
use serde::Serialize;

use super::Graph;
use crate::error::Error;
use crate::spectral::IntersectionArray;

/// All-pairs BFS distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceData {
    pub dist: Vec<Vec<usize>>,
    pub diameter: usize,
    /// `k_i` from vertex 0.
    pub sizes: Vec<usize>,
}

/// BFS from every vertex. Rows are computed in parallel and collected in
/// vertex order.
pub fn distance_data(g: &Graph) -> Result<DistanceData, Error> {
    if g.n() == 0 {
        return Err(Error::Parameter("empty graph".into()));
    }
    let dist: Vec<Vec<usize>> = (0..g.n())
        .into_par_iter()
        .map(|s| g.bfs(s).into_iter().collect::<Option<Vec<usize>>>())
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::Disconnected)?;
    let diameter = dist
        .iter()
        .flat_map(|r| r.iter().copied())
        .max()
        .unwrap_or(0);
    let mut sizes = vec![0; diameter + 1];
    for &d in &dist[0] {
        sizes[d] += 1;
    }
    Ok(DistanceData {
        dist,
        diameter,
        sizes,
    })
}

/// A pair of vertices at which an intersection number takes a different
/// value from the one seen first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub x: usize,
    pub y: usize,
    pub distance: usize,
    /// `c_i`, `a_i`, `b_i`, or `p^h_ij` with the indices filled in.
    pub parameter: String,
    pub expected: usize,
    pub found: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DrgReport {
    DistanceRegular(IntersectionArray),
    NotDistanceRegular(Witness),
}

impl DrgReport {
    pub fn array(&self) -> Option<&IntersectionArray> {
        match self {
            DrgReport::DistanceRegular(a) => Some(a),
            DrgReport::NotDistanceRegular(_) => None,
        }
    }
}

/// Checks that `c_i`, `a_i`, `b_i` are the same for every ordered pair at
/// distance `i` and returns the intersection array. With `strict`, every
/// `p^h_ij` is checked as well.
pub fn intersection_array(g: &Graph, strict: bool) -> Result<DrgReport, Error> {
    let dd = distance_data(g)?;
    intersection_array_from(g, &dd, strict)
}

pub(crate) fn intersection_array_from(
    g: &Graph,
    dd: &DistanceData,
    strict: bool,
) -> Result<DrgReport, Error> {
    let d = dd.diameter;
    if d == 0 {
        return Err(Error::Parameter(
            "single vertex has no intersection array".into(),
        ));
    }
    // seen[i] = (c_i, a_i, b_i) at the first pair with distance i
    let mut seen: Vec<Option<[usize; 3]>> = vec![None; d + 1];
    for x in 0..g.n() {
        let row = &dd.dist[x];
        for y in 0..g.n() {
            let i = row[y];
            let mut cab = [0usize; 3];
            for &z in g.neighbors(y) {
                let j = row[z];
                // j is i-1, i or i+1
                cab[j + 1 - i] += 1;
            }
            match seen[i] {
                None => seen[i] = Some(cab),
                Some(first) => {
                    if let Some(p) = (0..3).find(|&p| first[p] != cab[p]) {
                        return Ok(DrgReport::NotDistanceRegular(Witness {
                            x,
                            y,
                            distance: i,
                            parameter: format!("{}{i}", ["c", "a", "b"][p]),
                            expected: first[p],
                            found: cab[p],
                        }));
                    }
                }
            }
        }
    }
    if strict {
        if let Some(w) = strict_witness(g, dd) {
            return Ok(DrgReport::NotDistanceRegular(w));
        }
    }
    let b = (0..d).map(|i| seen[i].unwrap()[2] as i64).collect();
    let c = (1..=d).map(|i| seen[i].unwrap()[0] as i64).collect();
    Ok(DrgReport::DistanceRegular(IntersectionArray::new(b, c)?))
}

/// The intersection numbers seen from one base vertex `x`: every vertex
/// at distance `i` from `x` must have the same `c_i`, `a_i`, `b_i`. This
/// is the full test for graphs known to be distance-transitive and costs a
/// single BFS.
pub fn intersection_array_from_vertex(g: &Graph, x: usize) -> Result<DrgReport, Error> {
    let row: Vec<usize> = g
        .bfs(x)
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::Disconnected)?;
    let d = row.iter().copied().max().unwrap_or(0);
    if d == 0 {
        return Err(Error::Parameter(
            "single vertex has no intersection array".into(),
        ));
    }
    let mut seen: Vec<Option<[usize; 3]>> = vec![None; d + 1];
    for y in 0..g.n() {
        let i = row[y];
        let mut cab = [0usize; 3];
        for &z in g.neighbors(y) {
            cab[row[z] + 1 - i] += 1;
        }
        match seen[i] {
            None => seen[i] = Some(cab),
            Some(first) => {
                if let Some(p) = (0..3).find(|&p| first[p] != cab[p]) {
                    return Ok(DrgReport::NotDistanceRegular(Witness {
                        x,
                        y,
                        distance: i,
                        parameter: format!("{}{i}", ["c", "a", "b"][p]),
                        expected: first[p],
                        found: cab[p],
                    }));
                }
            }
        }
    }
    let b = (0..d).map(|i| seen[i].unwrap()[2] as i64).collect();
    let c = (1..=d).map(|i| seen[i].unwrap()[0] as i64).collect();
    Ok(DrgReport::DistanceRegular(IntersectionArray::new(b, c)?))
}

/// First pair whose `p^h_ij` table differs from the table of the first pair
/// at the same distance.
fn strict_witness(g: &Graph, dd: &DistanceData) -> Option<Witness> {
    let d = dd.diameter;
    let n = g.n();
    let mut seen: Vec<Option<Vec<usize>>> = vec![None; d + 1];
    for x in 0..n {
        for y in 0..n {
            let h = dd.dist[x][y];
            let mut table = vec![0usize; (d + 1) * (d + 1)];
            for z in 0..n {
                table[dd.dist[x][z] * (d + 1) + dd.dist[y][z]] += 1;
            }
            match &seen[h] {
                None => seen[h] = Some(table),
                Some(first) => {
                    if let Some(p) = (0..table.len()).find(|&p| first[p] != table[p]) {
                        return Some(Witness {
                            x,
                            y,
                            distance: h,
                            parameter: format!("p^{h}_{},{}", p / (d + 1), p % (d + 1)),
                            expected: first[p],
                            found: table[p],
                        });
                    }
                }
            }
        }
    }
    None
}

/// The graph on the distance-2 sphere of `x`, two vertices adjacent when
/// they are at distance 2 in `g`. Labels are the original vertex labels.
pub fn local_graph_g22(g: &Graph, x: usize) -> Result<Graph, Error> {
    if x >= g.n() {
        return Err(Error::Parameter(format!("vertex {x} out of range")));
    }
    let from_x: Vec<usize> = g
        .bfs(x)
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::Disconnected)?;
    let sphere: Vec<usize> = (0..g.n()).filter(|&v| from_x[v] == 2).collect();
    if sphere.is_empty() {
        return Err(Error::Parameter("graph has diameter below 2".into()));
    }
    let mut edges = Vec::new();
    for (i, &y) in sphere.iter().enumerate() {
        let dy = g.bfs(y);
        for (j, &z) in sphere.iter().enumerate().skip(i + 1) {
            if dy[z] == Some(2) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(sphere.len(), &edges)?
        .with_labels(sphere.iter().map(|&v| g.label(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::super::{construct_family, Family};
    use super::*;

    fn arr(g: &Graph) -> String {
        intersection_array(g, true)
            .unwrap()
            .array()
            .unwrap()
            .to_string()
    }

    #[test]
    fn family_arrays() {
        assert_eq!(
            arr(&construct_family(Family::Cycle, 7).unwrap()),
            "{2,1,1;1,1,1}"
        );
        assert_eq!(
            arr(&construct_family(Family::Odd, 7).unwrap()),
            "{4,3,3;1,1,2}"
        );
        assert_eq!(
            arr(&construct_family(Family::FoldedCube, 7).unwrap()),
            "{7,6,5;1,2,3}"
        );
        assert_eq!(
            arr(&construct_family(Family::Hypercube, 3).unwrap()),
            "{3,2,1;1,2,3}"
        );
    }

    #[test]
    fn distance_sizes() {
        let dd = distance_data(&construct_family(Family::Odd, 7).unwrap()).unwrap();
        assert_eq!((dd.diameter, dd.sizes.clone()), (3, vec![1, 4, 12, 18]));
        let dd = distance_data(&construct_family(Family::FoldedCube, 7).unwrap()).unwrap();
        assert_eq!(dd.sizes, vec![1, 7, 21, 35]);
        let path = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(distance_data(&path), Err(Error::Disconnected));
    }

    #[test]
    fn base_vertex_matches_full_check() {
        for (f, n) in [
            (Family::Cycle, 9),
            (Family::Odd, 9),
            (Family::FoldedCube, 9),
        ] {
            let g = construct_family(f, n).unwrap();
            assert_eq!(
                intersection_array_from_vertex(&g, 0).unwrap(),
                intersection_array(&g, false).unwrap()
            );
        }
    }

    #[test]
    fn path_is_not_distance_regular() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        match intersection_array(&p4, false).unwrap() {
            DrgReport::NotDistanceRegular(w) => {
                assert_eq!((w.x, w.y, w.distance), (1, 0, 1));
                assert_eq!((w.parameter.as_str(), w.expected, w.found), ("b1", 1, 0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn local_graphs() {
        let c7 = construct_family(Family::Cycle, 7).unwrap();
        let l = local_graph_g22(&c7, 0).unwrap();
        assert_eq!((l.n(), l.num_edges()), (2, 0));
        assert_eq!(
            local_graph_g22(&construct_family(Family::Odd, 7).unwrap(), 3)
                .unwrap()
                .n(),
            12
        );
        assert_eq!(
            local_graph_g22(&construct_family(Family::FoldedCube, 7).unwrap(), 5)
                .unwrap()
                .n(),
            21
        );
    }
}
