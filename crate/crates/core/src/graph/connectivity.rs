//! Vertex connectivity by unit-capacity max flow on the split graph.
//!
//! Every vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1` joined by an arc
//! of capacity one; an edge `uv` becomes the arcs `u_out -> v_in` and
//! `v_out -> u_in`. The number of internally vertex-disjoint `s`-`t` paths is
//! the max flow from `s_out` to `t_in`, and a minimum cut is read off the
//! residual network.

use super::{Graph, VertexSet};

const INF: i32 = i32::MAX / 4;

struct SplitNetwork {
    size: usize,
    cap: Vec<i32>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let size = 2 * g.order();
        let mut cap = vec![0; size * size];
        for v in 0..g.order() {
            cap[(2 * v) * size + 2 * v + 1] = 1;
            for u in g.neighbors(v) {
                cap[(2 * v + 1) * size + 2 * u] = INF;
            }
        }
        SplitNetwork { size, cap }
    }

    /// Breadth-first search in the residual network; returns parent pointers.
    fn bfs(&self, residual: &[i32], source: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.size];
        parent[source] = Some(source);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for y in 0..self.size {
                if parent[y].is_none() && residual[x * self.size + y] > 0 {
                    parent[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        parent
    }

    /// Local vertex connectivity between nonadjacent `s` and `t`, with a
    /// minimum separating vertex set.
    fn local(&self, s: usize, t: usize) -> (usize, VertexSet) {
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut residual = self.cap.clone();
        let mut flow = 0usize;
        loop {
            let parent = self.bfs(&residual, source);
            if parent[sink].is_none() {
                // vertices whose in-node is reachable but out-node is not
                let mut cut = VertexSet::EMPTY;
                for v in 0..self.size / 2 {
                    if parent[2 * v].is_some() && parent[2 * v + 1].is_none() {
                        cut.insert(v);
                    }
                }
                return (flow, cut);
            }
            let mut y = sink;
            while y != source {
                let x = parent[y].unwrap();
                residual[x * self.size + y] -= 1;
                residual[y * self.size + x] += 1;
                y = x;
            }
            flow += 1;
        }
    }
}

/// A minimum vertex cut of `g`, or `None` when no cut exists (complete graphs).
/// A disconnected graph yields the empty cut.
pub fn minimum_vertex_cut(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    if g.is_complete() {
        return None;
    }
    if !g.is_connected() {
        return Some(VertexSet::EMPTY);
    }
    let net = SplitNetwork::new(g);
    // Any minimum cut either misses the minimum-degree vertex v, so separates
    // v from some non-neighbor, or contains v, in which case it separates two
    // nonadjacent neighbors of v.
    let v = (0..n).min_by_key(|&v| g.degree(v)).unwrap();
    let mut best: Option<(usize, VertexSet)> = None;
    let mut consider = |s: usize, t: usize| {
        let (k, cut) = net.local(s, t);
        if best.as_ref().is_none_or(|(b, _)| k < *b) {
            best = Some((k, cut));
        }
    };
    for w in g.closed_neighbors(v).complement(n) {
        consider(v, w);
    }
    let nb = g.neighbors(v).to_vec();
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            if !g.has_edge(x, y) {
                consider(x, y);
            }
        }
    }
    best.map(|(_, cut)| cut)
}

/// Vertex connectivity `κ(G)`: the size of a smallest vertex set whose
/// removal disconnects `g`. Complete graphs return `n - 1`; disconnected
/// graphs return 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    match minimum_vertex_cut(g) {
        None => g.order() - 1,
        Some(cut) => cut.len(),
    }
}
