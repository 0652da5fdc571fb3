//! Simple undirected graphs on at most 64 vertices, stored as one
//! neighborhood bitset per vertex.

mod connectivity;
mod family;
mod graph6;
mod vertex_set;

use std::fmt;

pub use connectivity::{minimum_vertex_cut, vertex_connectivity};
pub use family::FamilySpec;
pub use graph6::{encode_graph6, parse_graph6};
pub use vertex_set::{Iter as VertexIter, VertexSet, MAX_VERTICES};

use crate::error::{Error, Result};

/// A simple undirected graph with vertices `0..n`.
///
/// `adj[v]` is the open neighborhood of `v`. The adjacency is kept symmetric
/// and loop-free by every constructor; a `Graph` never changes after it is
/// built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("a graph needs at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "{n} vertices requested; at most {MAX_VERTICES} are supported"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Domain(format!(
                    "edge ({u},{v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Domain(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighborhood bitsets, validating symmetry,
    /// absence of loops and range.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        Graph::empty(n)?;
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if !nb.is_subset(all) {
                return Err(Error::Domain(format!("vertex {v} has out-of-range neighbors")));
            }
            if nb.contains(v) {
                return Err(Error::Domain(format!("loop at vertex {v}")));
            }
            for u in nb {
                if !adj[u].contains(v) {
                    return Err(Error::Domain(format!("asymmetric adjacency at ({v},{u})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in 0..self.n {
            if self.adj[v].is_empty() {
                s.insert(v);
            }
        }
        s
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next | self.adj[v];
            }
            frontier = (next & within) - seen;
            seen = seen | frontier;
        }
        seen
    }

    /// True when the subgraph induced on `within` is connected (the empty set
    /// counts as connected).
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(s) => self.reachable_within(s, within) == within,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let c = self.reachable_within(s, left);
            out.push(c);
            left = left - c;
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// Checks that `set` only names vertices of this graph.
    pub fn check_set(&self, set: VertexSet) -> Result<()> {
        if set.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "vertex set {set} is not contained in 0..{}",
                self.n
            )))
        }
    }

    /// Cartesian product `self □ other`; vertex `(u, v)` becomes `u * |other| + v`.
    pub fn cartesian(&self, other: &Graph) -> Result<Graph> {
        let (n1, n2) = (self.n, other.n);
        let mut g = Graph::empty(n1 * n2)?;
        for u in 0..n1 {
            for v in 0..n2 {
                for z in other.neighbors(v) {
                    g.add_edge(u * n2 + v, u * n2 + z);
                }
                for w in self.neighbors(u) {
                    g.add_edge(u * n2 + v, w * n2 + v);
                }
            }
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| all - self.adj[v] - VertexSet::singleton(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            for u in self.adj[v] {
                adj[perm[v]].insert(perm[u]);
            }
        }
        Graph { n: self.n, adj }
    }

    /// Adds a new vertex `n` adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: VertexSet) -> Result<Graph> {
        self.check_set(neighbors)?;
        let mut g = Graph::empty(self.n + 1)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for u in neighbors {
            g.add_edge(self.n, u);
        }
        Ok(g)
    }

    /// Some pair of duplicate vertices: adjacent with `N[u] = N[v]`, or
    /// nonadjacent with `N(u) = N(v)`. Returns the lexicographically first
    /// such pair.
    pub fn duplicate_vertices(&self) -> Option<(usize, usize)> {
        for u in 0..self.n {
            for v in u + 1..self.n {
                let twins = if self.has_edge(u, v) {
                    self.closed_neighbors(u) == self.closed_neighbors(v)
                } else {
                    self.adj[u] == self.adj[v]
                };
                if twins {
                    return Some((u, v));
                }
            }
        }
        None
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {})", self.n, encode_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(self))
    }
}

/// Free-function form of [`Graph::duplicate_vertices`].
pub fn duplicate_vertices(g: &Graph) -> Option<(usize, usize)> {
    g.duplicate_vertices()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_2_1() -> Graph {
        // 5-cycle 0..4 plus chords 0-2 and 1-4
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 4)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::empty(0).is_err());
        assert!(matches!(Graph::empty(65), Err(Error::Capacity(_))));
    }

    #[test]
    fn from_adjacency_checks_symmetry() {
        let adj = vec![VertexSet::singleton(1), VertexSet::EMPTY];
        assert!(Graph::from_adjacency(adj).is_err());
    }

    #[test]
    fn duplicates_in_example_2_1() {
        assert_eq!(example_2_1().duplicate_vertices(), Some((0, 1)));
    }

    #[test]
    fn duplicates_in_complete_graph_are_adjacent() {
        let k4 = FamilySpec::Complete(4).generate().unwrap();
        let (u, v) = k4.duplicate_vertices().unwrap();
        assert!(k4.has_edge(u, v));
    }

    #[test]
    fn hypercube_has_no_duplicates() {
        let q3 = FamilySpec::Hypercube3.generate().unwrap();
        assert_eq!(q3.duplicate_vertices(), None);
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components().len(), 3);
        assert_eq!(g.isolated_vertices().to_vec(), vec![4]);
        assert!(example_2_1().is_connected());
    }

    #[test]
    fn permutation_preserves_edge_count() {
        let g = example_2_1();
        let h = g.permuted(&[4, 3, 2, 1, 0]);
        assert_eq!(h.edge_count(), g.edge_count());
        assert!(h.has_edge(4, 3));
    }
}
