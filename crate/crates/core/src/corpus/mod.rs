//! Graph and matrix corpora: every connected graph up to a small order, and
//! seeded random graphs, trees and singular matrices with a given pattern.

mod canon;
mod matrices;

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

pub use canon::{are_isomorphic, canonical_code, canonical_form, canonical_labeling};
pub use matrices::{
    conference_q3_gram, high_nullity_matrix, random_gram, random_nonsingular, random_rational, singular_in_pattern,
    singular_matrix, tree_matrix, MatrixSource,
};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Number of unlabeled connected graphs on `n = 1, 2, ...` vertices.
pub const CONNECTED_GRAPH_COUNTS: [usize; 9] = [1, 1, 2, 6, 21, 112, 853, 11117, 261080];

/// Largest order accepted by [`connected_graphs`].
pub const MAX_EXHAUSTIVE_ORDER: usize = 9;

/// One representative of every isomorphism class of connected graphs on `n`
/// vertices, in canonical labelling and sorted by canonical code.
///
/// Built by adding a vertex to each connected graph on `n - 1` vertices in
/// every possible way. This reaches every class since a connected graph
/// always has a vertex whose removal leaves it connected.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::Capacity(format!(
            "exhaustive generation supports 1 <= n <= {MAX_EXHAUSTIVE_ORDER}, got {n}"
        )));
    }
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n {
        let codes: BTreeSet<Vec<u64>> = level
            .par_iter()
            .flat_map_iter(|h| {
                let m = h.order();
                (1u64..1 << m)
                    .map(move |bits| canonical_code(&h.with_vertex(VertexSet::from_bits(bits)).expect("order fits")))
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = codes.iter().map(|c| canon::graph_from_code(c)).collect();
    }
    Ok(level)
}

/// All connected graphs on `1..=max_n` vertices, smallest order first.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(connected_graphs(n)?);
    }
    Ok(out)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// A random connected graph: a random tree plus random extra edges, with
/// vertex labels shuffled.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Graph> {
    let tree = random_tree(rng, n)?;
    let p = rng.random_range(0.0..0.8);
    let extra = random_graph(rng, n, p)?;
    let mut edges: Vec<(usize, usize)> = tree.edges().chain(extra.edges()).collect();
    edges.sort_unstable();
    edges.dedup();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Ok(Graph::from_edges(n, edges)?.permuted(&perm))
}

/// Uniform random labelled tree from a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Graph> {
    if n <= 2 {
        return Graph::from_edges(n, (n == 2).then_some((0, 1)));
    }
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Graph::from_edges(n, prufer_edges(n, &prufer))
}

fn prufer_edges(n: usize, prufer: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &p in prufer {
        degree[p] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &p in prufer {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, p));
        degree[leaf] -= 1;
        degree[p] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}
