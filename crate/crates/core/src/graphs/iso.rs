use super::distance::distance_data;
use super::Graph;

/// Backtracking isomorphism test for small connected graphs. Partial maps
/// must preserve distances, which prunes hard on distance-regular inputs.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.num_edges() != h.num_edges() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    if g.n() == 0 {
        return true;
    }
    let (Ok(ddg), Ok(ddh)) = (distance_data(g), distance_data(h)) else {
        return false;
    };
    // place g's vertices in BFS order from 0 so each new vertex has a placed
    // neighbour
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (ddg.dist[0][v], v));
    let mut image = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    extend(&order, 0, &ddg.dist, &ddh.dist, g, h, &mut image, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    order: &[usize],
    pos: usize,
    dg: &[Vec<usize>],
    dh: &[Vec<usize>],
    g: &Graph,
    h: &Graph,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    for w in 0..h.n() {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        let fits = order[..pos].iter().all(|&u| dg[u][v] == dh[image[u]][w]);
        if !fits {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(order, pos + 1, dg, dh, g, h, image, used) {
            return true;
        }
        used[w] = false;
        image[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{bipartite_double, complete_graph, construct_family, Family};

    #[test]
    fn doubles_of_small_graphs() {
        let c7 = construct_family(Family::Cycle, 7).unwrap();
        let c14 = construct_family(Family::Cycle, 14).unwrap();
        assert!(are_isomorphic(&bipartite_double(&c7), &c14));
        let q3 = construct_family(Family::Hypercube, 3).unwrap();
        assert!(are_isomorphic(&bipartite_double(&complete_graph(4)), &q3));
    }

    #[test]
    fn non_isomorphic_pairs() {
        let c6 = construct_family(Family::Cycle, 6).unwrap();
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles));
        let prism = Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let k33 = Graph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(!are_isomorphic(&prism, &k33));
    }
}
