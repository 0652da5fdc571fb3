//! Canonical labelling by colour refinement and individualization.
//!
//! Every leaf of the search tree (a discrete partition) gives a relabelling;
//! the canonical form is the one with the smallest adjacency code. There is
//! no automorphism pruning, which is fine at the sizes used here.

use crate::graph::{Graph, VertexSet};

/// Splits colour classes by the multiset of neighbour colours until stable.
/// Colours stay ordered: a class only splits into consecutive classes.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = colors.len();
    let mut classes = distinct(colors);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                c += 1;
            }
            colors[sigs[i].2] = c;
        }
        let next = c + 1;
        if next == classes {
            return;
        }
        classes = next;
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn code(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let mut rows = vec![0u64; g.order()];
    for v in 0..g.order() {
        for u in g.neighbors(v) {
            rows[perm[v]] |= 1 << perm[u];
        }
    }
    rows
}

fn search(g: &Graph, mut colors: Vec<usize>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    refine(g, &mut colors);
    let n = colors.len();
    let mut counts = vec![0usize; n];
    for &c in &colors {
        counts[c] += 1;
    }
    let Some(target) = counts.iter().position(|&k| k > 1) else {
        let c = code(g, &colors);
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            *best = Some((c, colors));
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] == target) {
        let next: Vec<usize> = (0..n)
            .map(|u| 2 * colors[u] + usize::from(colors[u] == target && u != v))
            .collect();
        search(g, next, best);
    }
}

/// A relabelling `perm` (old vertex `v` becomes `perm[v]`) that is the same
/// for all isomorphic graphs up to automorphism.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut best = None;
    search(g, vec![0; g.order()], &mut best);
    best.expect("search reaches a leaf").1
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}

/// Adjacency rows of the canonical form; equal exactly for isomorphic graphs.
pub fn canonical_code(g: &Graph) -> Vec<u64> {
    canonical_form(g).adjacency().iter().map(|s| s.bits()).collect()
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.edge_count() == h.edge_count() && canonical_code(g) == canonical_code(h)
}

pub(crate) fn graph_from_code(code: &[u64]) -> Graph {
    Graph::from_adjacency(code.iter().map(|&b| VertexSet::from_bits(b)).collect()).expect("valid code")
}
