//! Simple undirected graphs on a small vertex set.
//!
//! Adjacency is stored as one bitset row per vertex. Rows are a single
//! `u64` word while `n <= 64` and grow to several words beyond that, so the
//! same type carries trees, their line graphs and the small census graphs.

mod canon;
mod enumerate;
mod families;
mod graph6;
mod trees;

pub use canon::{canonical_form, CanonicalForm};
pub use enumerate::{enumerate_connected_graphs, enumerate_graphs, MAX_GRAPH_CENSUS};
pub use families::{build_family, validate_t4_structure, Family, T4Subfamily};
pub use graph6::{parse_edge_list, to_edge_list};
pub use trees::{enumerate_trees, free_tree_count, TreeIter, DEFAULT_TREE_LIMIT};

use std::fmt;

use thiserror::Error;

/// Upper bound on the vertex count of any [`Graph`].
pub const MAX_VERTICES: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("parameters out of order: {0}")]
    ParameterOrder(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("capacity exceeded: {requested} > {limit}")]
    Capacity { requested: usize, limit: usize },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{u}{v} is not an edge")]
    MissingEdge { u: usize, v: usize },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("structural hypothesis violated: {0}")]
    StructuralHypothesis(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`]; use [`Graph::try_empty`] for
    /// untrusted sizes.
    pub fn empty(n: usize) -> Graph {
        Graph::try_empty(n).expect("vertex count within capacity")
    }

    pub fn try_empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity {
                requested: n,
                limit: MAX_VERTICES,
            });
        }
        let words = n.div_ceil(64).max(1);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::try_empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Inserts the edge `uv`. Repeated insertion is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}{v}");
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "bad edge {u}{v}");
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Subgraph induced on `keep`, relabeled `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Disjoint union, `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_count() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() + 1 == self.n && self.is_connected()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_edge(u, v) as i64).collect())
            .collect()
    }

    /// Dense Laplacian `D - A`.
    pub fn laplacian_matrix(&self) -> Vec<Vec<i64>> {
        let mut m = self.adjacency_matrix();
        for (u, row) in m.iter_mut().enumerate() {
            for x in row.iter_mut() {
                *x = -*x;
            }
            row[u] = self.degree(u) as i64;
        }
        m
    }

    /// Line graph: one vertex per edge (lexicographic by endpoint pair),
    /// adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        let mut index = vec![Vec::new(); self.n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            index[u].push(i);
            index[v].push(i);
        }
        let mut l = Graph::empty(edges.len());
        for incident in &index {
            for (a, &i) in incident.iter().enumerate() {
                for &j in &incident[a + 1..] {
                    l.add_edge(i, j);
                }
            }
        }
        l
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Replaces the edge `uv` by a path `u w v` through a new vertex `w = n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge { u, v });
        }
        let w = self.n;
        let mut g = Graph::try_empty(self.n + 1)?;
        for (a, b) in self.edges() {
            if (a, b) != (u.min(v), u.max(v)) {
                g.add_edge(a, b);
            }
        }
        g.add_edge(u, w);
        g.add_edge(w, v);
        Ok(g)
    }

    /// Number of triangles.
    pub fn triangle_count(&self) -> usize {
        // every triangle is seen once from each of its three edges
        let mut t = 0;
        for (u, v) in self.edges() {
            t += self
                .row(u)
                .iter()
                .zip(self.row(v))
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum::<usize>();
        }
        t / 3
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterates the set bits of a multi-word bitset.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(k: usize) -> Graph {
        let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Graph::from_edges(k, &edges).unwrap()
    }

    #[test]
    fn edge_count_is_half_degree_sum() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        assert_eq!(g.edge_count() * 2, g.degrees().iter().sum::<usize>());
        assert_eq!(g.triangle_count(), 1);
        assert_eq!(g.component_count(), 2);
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(
            Graph::try_empty(MAX_VERTICES + 1),
            Err(GraphError::Capacity { .. })
        ));
    }

    #[test]
    fn multiword_rows() {
        let g = path(130);
        assert_eq!(g.words(), 3);
        assert_eq!(g.edge_count(), 129);
        assert!(g.has_edge(64, 63) && g.has_edge(127, 128));
        assert!(g.is_tree());
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
    }

    #[test]
    fn line_graph_of_p4_is_p3() {
        let l = path(4).line_graph();
        assert_eq!(l.n(), 3);
        assert_eq!(l.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn line_graph_of_claw_is_triangle() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let l = claw.line_graph();
        assert_eq!(l.n(), 3);
        assert_eq!(l.edge_count(), 3);
    }

    #[test]
    fn complement_examples() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.complement().edge_count(), 0);
        // K_{1,3} complement is K_3 plus an isolated vertex
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = claw.complement();
        assert_eq!(c.edges(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(c.degree(0), 0);
    }

    #[test]
    fn subdivision() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c4 = k3.subdivide_edge(0, 1).unwrap();
        assert_eq!(c4.n(), 4);
        assert_eq!(c4.degrees(), vec![2, 2, 2, 2]);
        assert!(c4.is_connected());
        let p3 = path(2).subdivide_edge(1, 0).unwrap();
        assert_eq!(p3.degrees(), vec![1, 1, 2]);
        assert_eq!(
            path(3).subdivide_edge(0, 2),
            Err(GraphError::MissingEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn bipartite_detection() {
        assert!(path(6).is_bipartite());
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!k3.is_bipartite());
    }
}
