//! Concrete graphs: the classical families, BFS distance data,
//! distance-regularity checks, bipartite doubles and local graphs.

mod distance;
mod families;
mod io;
mod iso;
mod spectrum;

pub use distance::{
    distance_data, intersection_array, intersection_array_from_vertex, local_graph_g22,
    DistanceData, DrgReport, Witness,
};
pub use families::{
    bipartite_double, complete_graph, construct_family, Family, MAX_FAMILY_VERTICES,
};
pub use io::{parse_edge_list, parse_labels, write_edge_list, write_labels};
pub use iso::are_isomorphic;
pub use spectrum::{graph_spectrum, graph_spectrum_with_cap, DEFAULT_SPECTRUM_CAP};

use crate::error::Error;

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops, repeated edges and
    /// endpoints outside `0..n` are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Parameter(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Parameter(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, nb) in adj.iter_mut().enumerate() {
            nb.sort_unstable();
            if let Some(w) = nb.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Parameter(format!("repeated edge {u}-{}", w[0])));
            }
        }
        Ok(Graph { adj, labels: None })
    }

    /// Trusted constructor for generators that already produce sorted,
    /// symmetric, loop-free lists.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(u, nb)| {
            nb.windows(2).all(|w| w[0] < w[1])
                && nb
                    .iter()
                    .all(|&v| v != u && adj[v].binary_search(&u).is_ok())
        }));
        Graph { adj, labels: None }
    }

    /// Attaches one label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, Error> {
        if labels.len() != self.n() {
            return Err(Error::Parameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// The common degree, if the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|nb| nb.len() == k).then_some(k)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Every edge once, as `(u, v)` with `u < v`, in order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        let mut a = vec![vec![0i64; n]; n];
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb {
                a[u][v] = 1;
            }
        }
        a
    }

    /// Distances from `src`; `None` for unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Two-colourability, checked per component.
    pub fn is_bipartite(&self) -> bool {
        let mut colour: Vec<Option<bool>> = vec![None; self.n()];
        for s in 0..self.n() {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let cu = colour[u].unwrap();
                for &v in &self.adj[u] {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            stack.push(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}
