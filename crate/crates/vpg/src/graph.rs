//! Simple undirected graphs over dense integer vertex ids.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Sorted list of vertex ids, the canonical form used in witnesses and
/// decompositions.
pub type VertexSet = Vec<usize>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("expected a tree")]
    NotATree,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("base tree must have at least two vertices and maximum degree three")]
    BadBaseTree,
}

/// A simple undirected graph with adjacency sets.
///
/// Immutable after construction; no self-loops, adjacency is symmetric.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::OutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::OutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn complete(n: usize) -> Self {
        let mut adj = vec![BTreeSet::new(); n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    adj[u].insert(v);
                }
            }
        }
        Graph { n, adj }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        self.adj[u].intersection(&self.adj[v]).copied().collect()
    }

    /// True if every pair in `set` is adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Subgraph induced by `s`, relabeled `0..s.len()` in the order of `s`.
    /// Also returns the map back to original ids (`map[i]` = original id of
    /// new vertex `i`).
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        for &v in s {
            if v >= self.n {
                return Err(GraphError::OutOfRange { vertex: v, n: self.n });
            }
        }
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in s.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![BTreeSet::new(); s.len()];
        for (i, &v) in s.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX {
                    adj[i].insert(pos[w]);
                }
            }
        }
        Ok((Graph { n: s.len(), adj }, s.to_vec()))
    }

    pub fn complement(&self) -> Graph {
        let mut adj = vec![BTreeSet::new(); self.n];
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.adj[u].contains(&v) {
                    adj[u].insert(v);
                }
            }
        }
        Graph { n: self.n, adj }
    }

    /// Maximal connected vertex sets, each sorted, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|s| s.iter().map(|&v| v + self.n).collect::<BTreeSet<_>>()),
        );
        Graph { n, adj }
    }

    /// Join: disjoint union plus all cross edges.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in self.n..g.n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() == self.n - 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_basics() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));

        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.degree(2), 2);

        assert_eq!(
            Graph::from_edges(3, &[(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 5)]).unwrap_err(),
            GraphError::OutOfRange { vertex: 5, .. }
        ));
        // duplicate edges collapse
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = Graph::complete(4);
        let (h, map) = k4.induced_subgraph(&[0, 2, 3]).unwrap();
        assert_eq!(h, Graph::complete(3));
        assert_eq!(map, vec![0, 2, 3]);

        let c5 = Graph::cycle(5);
        let (h, _) = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(h, Graph::path(3));

        let (h, _) = c5.induced_subgraph(&[1, 3]).unwrap();
        assert_eq!(h.edge_count(), 0);

        assert!(c5.induced_subgraph(&[0, 9]).is_err());
    }

    #[test]
    fn complement_examples() {
        let c5 = Graph::cycle(5);
        let co = c5.complement();
        // C5 is self-complementary: 1-3-0-2-4 is a 5-cycle in the complement.
        assert_eq!(co.edge_count(), 5);
        assert!(co.has_edge(0, 2) && co.has_edge(0, 3));

        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));

        let prism = Graph::cycle(6).complement();
        assert_eq!(prism.edge_count(), 9);
        assert!(prism.is_clique(&[0, 2, 4]) && prism.is_clique(&[1, 3, 5]));
        assert!(prism.has_edge(0, 3) && prism.has_edge(1, 4) && prism.has_edge(2, 5));

        // involution, exact adjacency
        let g = Graph::from_edges(6, &[(0, 3), (1, 4), (2, 3), (4, 5)]).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn components_and_union() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(Graph::empty(3).connected_components().len(), 3);
        assert!(Graph::cycle(4).is_connected());

        let u = Graph::complete(3).disjoint_union(&Graph::complete(2));
        assert_eq!(u.connected_components(), vec![vec![0, 1, 2], vec![3, 4]]);
    }

    #[test]
    fn join_examples() {
        let w4 = Graph::complete(1).join(&Graph::cycle(4));
        assert_eq!(w4.vertex_count(), 5);
        assert_eq!(w4.edge_count(), 8);

        let k23 = Graph::empty(2).join(&Graph::empty(3));
        assert_eq!(k23.edge_count(), 6);
        assert!(!k23.has_edge(0, 1) && !k23.has_edge(2, 3));
        assert!(k23.has_edge(0, 2) && k23.has_edge(1, 4));

        let g1 = Graph::path(3);
        let g2 = Graph::cycle(3);
        let u = g1.disjoint_union(&g2).complement();
        let j = g1.complement().join(&g2.complement());
        assert_eq!(u, j);
    }

    #[test]
    fn tree_checks() {
        assert!(Graph::path(4).is_tree());
        assert!(!Graph::cycle(4).is_tree());
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::empty(2).is_tree());
    }
}
