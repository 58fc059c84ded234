//! Simple undirected graphs and the matrices derived from them.

mod edgelist;
mod generators;
mod graph6;
mod random;
mod source;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::SymmetricMatrix;

pub use edgelist::parse_edge_list;
pub use generators::{
    barbell, circulant, complete, complete_bipartite, complete_multipartite, cycle, grotzsch,
    mycielskian, petersen, sun, windmill,
};
pub use graph6::{emit_graph6, parse_graph6, MAX_GRAPH6_VERTICES};
pub use random::random_gnp;
pub use source::{generate, resolve_input};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted and deduplicated, so two
/// graphs with the same labeled edge set compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, normalizing each pair to `(min, max)` and collapsing
    /// duplicates. Loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("a graph needs at least one vertex"));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::domain(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Graph { n, edges: list })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// First vertex of degree zero, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.degrees().iter().position(|&d| d == 0)
    }

    pub fn is_regular(&self) -> bool {
        let deg = self.degrees();
        deg.iter().all(|&d| d == deg[0])
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.neighbors();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Two-coloring by BFS when the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<usize>> {
        let adj = self.neighbors();
        let mut side = vec![usize::MAX; self.n];
        for start in 0..self.n {
            if side[start] != usize::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if side[w] == usize::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn to_graph6(&self) -> String {
        emit_graph6(self)
    }

    /// Matrix of the requested kind. See [`GraphMatrixKind`].
    pub fn matrix(&self, kind: GraphMatrixKind) -> Result<SymmetricMatrix> {
        build_matrix(self, kind)
    }
}

/// The six graph matrices the bounds are built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphMatrixKind {
    /// `A`
    Adjacency,
    /// `L = D - A`
    Laplacian,
    /// `Q = D + A`
    SignlessLaplacian,
    /// `D^{-1/2} A D^{-1/2}`
    NormalizedAdjacency,
    /// `I - D^{-1/2} A D^{-1/2}`
    NormalizedLaplacian,
    /// `I + D^{-1/2} A D^{-1/2}`
    NormalizedSignlessLaplacian,
}

impl GraphMatrixKind {
    pub const ALL: [GraphMatrixKind; 6] = [
        GraphMatrixKind::Adjacency,
        GraphMatrixKind::Laplacian,
        GraphMatrixKind::SignlessLaplacian,
        GraphMatrixKind::NormalizedAdjacency,
        GraphMatrixKind::NormalizedLaplacian,
        GraphMatrixKind::NormalizedSignlessLaplacian,
    ];

    pub fn is_normalized(self) -> bool {
        matches!(
            self,
            GraphMatrixKind::NormalizedAdjacency
                | GraphMatrixKind::NormalizedLaplacian
                | GraphMatrixKind::NormalizedSignlessLaplacian
        )
    }
}

/// Builds the `n x n` matrix of `kind` for `g`.
///
/// Each entry is computed once for `k <= l` and mirrored, so the result is
/// symmetric bit for bit. Normalized kinds fail on isolated vertices.
pub fn build_matrix(g: &Graph, kind: GraphMatrixKind) -> Result<SymmetricMatrix> {
    let n = g.n();
    let deg = g.degrees();
    if kind.is_normalized() {
        if let Some(v) = g.isolated_vertex() {
            return Err(Error::domain(format!(
                "{kind:?} is undefined: vertex {v} is isolated"
            )));
        }
    }
    let adjacent = |k: usize, l: usize| g.has_edge(k, l);

    let m = match kind {
        GraphMatrixKind::Adjacency => {
            SymmetricMatrix::from_fn(n, |k, l| if k != l && adjacent(k, l) { 1.0 } else { 0.0 })
        }
        GraphMatrixKind::Laplacian | GraphMatrixKind::SignlessLaplacian => {
            let sign = if kind == GraphMatrixKind::Laplacian { -1.0 } else { 1.0 };
            SymmetricMatrix::from_fn(n, |k, l| {
                if k == l {
                    deg[k] as f64
                } else if adjacent(k, l) {
                    sign
                } else {
                    0.0
                }
            })
        }
        GraphMatrixKind::NormalizedAdjacency
        | GraphMatrixKind::NormalizedLaplacian
        | GraphMatrixKind::NormalizedSignlessLaplacian => {
            let (diag, sign) = match kind {
                GraphMatrixKind::NormalizedAdjacency => (0.0, 1.0),
                GraphMatrixKind::NormalizedLaplacian => (1.0, -1.0),
                _ => (1.0, 1.0),
            };
            SymmetricMatrix::from_fn(n, |k, l| {
                if k == l {
                    diag
                } else if adjacent(k, l) {
                    sign / ((deg[k] * deg[l]) as f64).sqrt()
                } else {
                    0.0
                }
            })
        }
    };
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(matches!(Graph::new(3, [(1, 1)]), Err(Error::Domain(_))));
        assert!(matches!(Graph::new(3, [(0, 3)]), Err(Error::Domain(_))));
        assert!(Graph::new(0, []).is_err());
    }

    #[test]
    fn edges_are_normalized_and_deduplicated() {
        let g = Graph::new(3, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn k2_laplacian() {
        let g = complete(2).unwrap();
        let l = build_matrix(&g, GraphMatrixKind::Laplacian).unwrap();
        assert_eq!(l.to_rows(), vec![vec![1.0, -1.0], vec![-1.0, 1.0]]);
    }

    #[test]
    fn k3_normalized_adjacency_off_diagonal_is_half() {
        let g = complete(3).unwrap();
        let a = build_matrix(&g, GraphMatrixKind::NormalizedAdjacency).unwrap();
        for k in 0..3 {
            for l in 0..3 {
                let want = if k == l { 0.0 } else { 0.5 };
                assert_eq!(a.get(k, l), want);
            }
        }
    }

    #[test]
    fn star_signless_laplacian_diagonal() {
        let g = complete_bipartite(1, 3).unwrap();
        let q = build_matrix(&g, GraphMatrixKind::SignlessLaplacian).unwrap();
        let diag: Vec<f64> = (0..4).map(|i| q.get(i, i)).collect();
        assert_eq!(diag, vec![3.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn normalized_kinds_reject_isolated_vertex() {
        let g = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        let err = build_matrix(&g, GraphMatrixKind::NormalizedLaplacian).unwrap_err();
        assert!(err.to_string().contains("vertex 3"), "{err}");
        assert!(build_matrix(&g, GraphMatrixKind::Laplacian).is_ok());
    }

    #[test]
    fn laplacian_rows_sum_to_zero_and_normalized_identities_hold() {
        let g = petersen();
        let l = g.matrix(GraphMatrixKind::Laplacian).unwrap();
        let q = g.matrix(GraphMatrixKind::SignlessLaplacian).unwrap();
        for k in 0..g.n() {
            let s: f64 = (0..g.n()).map(|l_| l.get(k, l_)).sum();
            assert_eq!(s, 0.0);
            assert!((0..g.n()).all(|l_| q.get(k, l_) >= 0.0));
        }
        let g = sun(5).unwrap();
        let na = g.matrix(GraphMatrixKind::NormalizedAdjacency).unwrap();
        let nl = g.matrix(GraphMatrixKind::NormalizedLaplacian).unwrap();
        let nq = g.matrix(GraphMatrixKind::NormalizedSignlessLaplacian).unwrap();
        for k in 0..g.n() {
            for l_ in 0..g.n() {
                let id = if k == l_ { 1.0 } else { 0.0 };
                assert_eq!(nl.get(k, l_), id - na.get(k, l_));
                assert_eq!(nq.get(k, l_), id + na.get(k, l_));
            }
        }
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        assert!(cycle(6).unwrap().bipartition().is_some());
        assert!(cycle(5).unwrap().bipartition().is_none());
    }
}
