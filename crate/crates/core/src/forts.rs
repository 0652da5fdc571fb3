//! Forts, minimum fort search, fort sequences and zero forcing.
//!
//! A fort is a nonempty vertex set `F` such that no vertex outside `F` has
//! exactly one neighbor in `F`. The complement of a zero forcing closure is
//! always a fort (when nonempty), and the minimum fort size is the spark of
//! the graph.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default vertex limit for exhaustive fort enumeration.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 16;

/// Largest order for which individual forts may be listed.
pub const EMIT_LIMIT: usize = 10;

#[inline]
fn fort_condition(g: &Graph, f: VertexSet) -> bool {
    if f.is_empty() {
        return false;
    }
    f.complement(g.order()).iter().all(|v| (g.neighbors(v) & f).len() != 1)
}

/// Whether `f` is a fort of `g`. The empty set is never a fort.
pub fn is_fort(g: &Graph, f: VertexSet) -> Result<bool> {
    g.check_set(f)?;
    Ok(fort_condition(g, f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMethod {
    BruteForce,
    BranchAndBound,
}

impl std::fmt::Display for SearchMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SearchMethod::BruteForce => "brute_force",
            SearchMethod::BranchAndBound => "branch_and_bound",
        })
    }
}

/// A minimum fort together with how it was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FortReport {
    pub minimum_fort: VertexSet,
    pub size: usize,
    pub method: SearchMethod,
}

/// Spark of `g` (minimum fort size) by branch and bound.
///
/// Among all minimum forts the lexicographically smallest (as a sorted
/// vertex list) is returned. A graph with an isolated vertex has spark 1 and
/// the fort is its lowest isolated vertex.
pub fn spark(g: &Graph) -> FortReport {
    spark_with(g, SearchMethod::BranchAndBound)
}

pub fn spark_with(g: &Graph, method: SearchMethod) -> FortReport {
    let fort = match method {
        SearchMethod::BruteForce => brute_force_minimum_fort(g),
        SearchMethod::BranchAndBound => branch_and_bound_minimum_fort(g),
    };
    FortReport {
        minimum_fort: fort,
        size: fort.len(),
        method,
    }
}

/// Enumerates subsets by increasing size, lexicographically within a size.
fn brute_force_minimum_fort(g: &Graph) -> VertexSet {
    let n = g.order();
    for k in 1..=n {
        for combo in (0..n).combinations(k) {
            let f = VertexSet::from_indices(combo).expect("n <= 64");
            if fort_condition(g, f) {
                return f;
            }
        }
    }
    unreachable!("the full vertex set is always a fort")
}

/// Three-state search: each vertex is in the fort, out of it, or undecided.
struct FortSearch<'g> {
    g: &'g Graph,
    all: VertexSet,
}

enum Propagation {
    Conflict,
    Settled(VertexSet, VertexSet),
}

impl<'g> FortSearch<'g> {
    /// Applies the forced moves implied by the fort condition until nothing
    /// changes, or reports a contradiction.
    fn propagate(&self, mut inside: VertexSet, mut outside: VertexSet, budget: usize) -> Propagation {
        loop {
            if inside.len() > budget {
                return Propagation::Conflict;
            }
            let mut undecided = self.all - inside - outside;
            if inside.len() == budget {
                outside = outside | undecided;
                undecided = VertexSet::EMPTY;
            }
            let mut changed = false;
            for v in outside {
                let nb = self.g.neighbors(v);
                let seen = (nb & inside).len();
                let open = nb & undecided;
                match (seen, open.len()) {
                    (1, 0) => return Propagation::Conflict,
                    // the only open neighbor must join, or v sees exactly one
                    (1, 1) => {
                        inside = inside | open;
                        undecided = undecided - open;
                        changed = true;
                    }
                    // the only open neighbor must stay out, or v would see exactly one
                    (0, 1) => {
                        outside = outside | open;
                        undecided = undecided - open;
                        changed = true;
                    }
                    _ => {}
                }
            }
            // an undecided vertex whose neighbors are all decided and which
            // sees exactly one fort vertex cannot be left out
            for v in undecided {
                let nb = self.g.neighbors(v);
                if (nb & undecided).is_empty() && (nb & inside).len() == 1 {
                    inside.insert(v);
                    undecided.remove(v);
                    changed = true;
                }
            }
            if !changed {
                return Propagation::Settled(inside, outside);
            }
        }
    }

    /// Depth-first search for a fort with at most `budget` vertices.
    /// Branches on the lowest undecided vertex, trying "in" first, so the
    /// first fort found is lexicographically smallest among those of its size.
    fn search(&self, inside: VertexSet, outside: VertexSet, budget: usize) -> Option<VertexSet> {
        let (inside, outside) = match self.propagate(inside, outside, budget) {
            Propagation::Conflict => return None,
            Propagation::Settled(i, o) => (i, o),
        };
        let undecided = self.all - inside - outside;
        match undecided.first() {
            None => (!inside.is_empty()).then_some(inside),
            Some(v) => {
                let with = inside | VertexSet::singleton(v);
                self.search(with, outside, budget)
                    .or_else(|| self.search(inside, outside | VertexSet::singleton(v), budget))
            }
        }
    }
}

/// Iterative deepening over the fort size.
fn branch_and_bound_minimum_fort(g: &Graph) -> VertexSet {
    let search = FortSearch { g, all: g.vertices() };
    for budget in 1..=g.order() {
        if let Some(f) = search.search(VertexSet::EMPTY, VertexSet::EMPTY, budget) {
            debug_assert!(fort_condition(g, f));
            return f;
        }
    }
    unreachable!("the full vertex set is always a fort")
}

/// Number of forts of each cardinality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FortSequence {
    /// `counts[i]` is the number of forts with `i` vertices, `0 <= i <= n`.
    counts: Vec<u64>,
}

impl FortSequence {
    pub fn order(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, size: usize) -> u64 {
        self.counts.get(size).copied().unwrap_or(0)
    }

    /// `(s_2, s_3, ..., s_n)`.
    pub fn sequence(&self) -> &[u64] {
        self.counts.get(2..).unwrap_or(&[])
    }

    /// Counts indexed by size, starting at size 0.
    pub fn by_size(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.order() > limit {
        return Err(Error::Capacity(format!(
            "exhaustive fort enumeration is limited to {limit} vertices (graph has {}); \
             use the branch-and-bound spark search instead",
            g.order()
        )));
    }
    Ok(())
}

/// Fort counts by size, using [`DEFAULT_EXHAUSTIVE_LIMIT`].
pub fn fort_sequence(g: &Graph) -> Result<FortSequence> {
    fort_sequence_with_limit(g, DEFAULT_EXHAUSTIVE_LIMIT)
}

/// Fort counts by size over all `2^n - 1` nonempty subsets. Subsets are
/// split by their top bits so the work runs in parallel.
pub fn fort_sequence_with_limit(g: &Graph, limit: usize) -> Result<FortSequence> {
    check_limit(g, limit)?;
    let n = g.order();
    let low_bits = n.min(12);
    let high = 1u64 << (n - low_bits);
    let counts = (0..high)
        .into_par_iter()
        .map(|prefix| {
            let mut local = vec![0u64; n + 1];
            let base = prefix << low_bits;
            for low in 0..(1u64 << low_bits) {
                let f = VertexSet::from_bits(base | low);
                if fort_condition(g, f) {
                    local[f.len()] += 1;
                }
            }
            local
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(FortSequence { counts })
}

/// Every fort of `g`, in increasing order of bit pattern. Only for
/// `n <= EMIT_LIMIT`.
pub fn enumerate_forts(g: &Graph) -> Result<Vec<VertexSet>> {
    check_limit(g, EMIT_LIMIT)?;
    Ok((1..1u64 << g.order())
        .map(VertexSet::from_bits)
        .filter(|&f| fort_condition(g, f))
        .collect())
}

/// Whether every `k`-subset of the vertices is a fort.
pub fn every_subset_is_fort(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k == 0 || k > n {
        return false;
    }
    (0..n)
        .combinations(k)
        .all(|c| fort_condition(g, VertexSet::from_indices(c).expect("n <= 64")))
}

/// Blue/white coloring under the standard zero forcing rule.
#[derive(Clone, Debug)]
pub struct ZeroForcingState<'g> {
    g: &'g Graph,
    blue: VertexSet,
}

impl<'g> ZeroForcingState<'g> {
    pub fn new(g: &'g Graph, blue: VertexSet) -> Result<Self> {
        g.check_set(blue)?;
        Ok(ZeroForcingState { g, blue })
    }

    pub fn blue(&self) -> VertexSet {
        self.blue
    }

    /// The white vertex `v` would force, if `v` is blue with exactly one
    /// white neighbor.
    pub fn force_target(&self, v: usize) -> Option<usize> {
        if !self.blue.contains(v) {
            return None;
        }
        let white = self.g.neighbors(v) - self.blue;
        (white.len() == 1).then(|| white.first().unwrap())
    }

    /// Performs the first available force in `order`; returns `(forcer, forced)`.
    pub fn force_once_in<I: IntoIterator<Item = usize>>(&mut self, order: I) -> Option<(usize, usize)> {
        for v in order {
            if let Some(w) = self.force_target(v) {
                self.blue.insert(w);
                return Some((v, w));
            }
        }
        None
    }

    /// Applies forces until none is possible and returns the closure.
    pub fn run(mut self) -> VertexSet {
        let n = self.g.order();
        while self.force_once_in(0..n).is_some() {}
        self.blue
    }
}

/// Closure of `b` under the standard color change rule.
pub fn zf_closure(g: &Graph, b: VertexSet) -> Result<VertexSet> {
    Ok(ZeroForcingState::new(g, b)?.run())
}

/// Closure computed by always scanning candidate forcers in the given order.
/// The result does not depend on `order`; this exists to test that.
pub fn zf_closure_with_order(g: &Graph, b: VertexSet, order: &[usize]) -> Result<VertexSet> {
    let mut state = ZeroForcingState::new(g, b)?;
    while state.force_once_in(order.iter().copied()).is_some() {}
    Ok(state.blue())
}

pub fn is_zero_forcing_set(g: &Graph, b: VertexSet) -> Result<bool> {
    Ok(zf_closure(g, b)? == g.vertices())
}

/// Largest size of a set that is not zero forcing: `n - spark(G)`.
pub fn failed_zero_forcing_number(g: &Graph) -> usize {
    g.order() - spark(g).size
}

/// Smallest complement of a failed zero forcing set; equals the spark.
pub fn zero_blocking_number(g: &Graph) -> usize {
    spark(g).size
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(v.iter().copied()).unwrap()
    }

    fn example_2_1() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 4)]).unwrap()
    }

    #[test]
    fn fort_predicate_basics() {
        let g = example_2_1();
        assert!(is_fort(&g, set(&[0, 1])).unwrap());
        assert!(is_fort(&g, g.vertices()).unwrap());
        assert!(!is_fort(&g, VertexSet::EMPTY).unwrap());
        assert!(matches!(is_fort(&g, set(&[7])), Err(Error::Domain(_))));
    }

    #[test]
    fn friendship_has_no_three_forts() {
        let g = gen("friendship:3");
        for c in (0..7).combinations(3) {
            assert!(!is_fort(&g, VertexSet::from_indices(c).unwrap()).unwrap());
        }
    }

    #[test]
    fn spark_example_2_1() {
        let r = spark(&example_2_1());
        assert_eq!(r.size, 2);
        assert_eq!(r.minimum_fort, set(&[0, 1]));
        assert_eq!(r.method, SearchMethod::BranchAndBound);
    }

    #[test]
    fn spark_spider_unique_minimum() {
        for m in 4..9 {
            let g = gen(&format!("spider:{m},1,1"));
            let r = spark(&g);
            assert_eq!(r.minimum_fort, set(&[m + 1, m + 2]));
        }
    }

    #[test]
    fn spark_paths() {
        for n in 2..=12 {
            let g = gen(&format!("path:{n}"));
            let expected = (n + 2) / 2; // ceil((n+1)/2)
            assert_eq!(spark(&g).size, expected, "P{n}");
            assert_eq!(spark_with(&g, SearchMethod::BruteForce).size, expected, "P{n}");
        }
    }

    #[test]
    fn isolated_vertex_is_a_singleton_fort() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let r = spark(&g);
        assert_eq!(r.minimum_fort, set(&[3]));
        assert_eq!(
            spark_with(&g, SearchMethod::BruteForce),
            FortReport {
                method: SearchMethod::BruteForce,
                ..r
            }
        );
    }

    #[test]
    fn friendship_sequence() {
        let seq = fort_sequence(&gen("friendship:3")).unwrap();
        assert_eq!(seq.sequence(), &[3, 0, 11, 12, 7, 1]);
    }

    #[test]
    fn complete_sequence_is_binomial() {
        for n in 2..=8 {
            let seq = fort_sequence(&gen(&format!("complete:{n}"))).unwrap();
            let mut binom = 1u64;
            for i in 1..=n as u64 {
                binom = binom * (n as u64 - i + 1) / i;
                if i >= 2 {
                    assert_eq!(seq.count(i as usize), binom);
                }
            }
        }
    }

    #[test]
    fn sequence_respects_limit() {
        let g = gen("path:17");
        assert!(matches!(fort_sequence(&g), Err(Error::Capacity(_))));
        assert!(fort_sequence_with_limit(&g, 17).is_ok());
        assert!(enumerate_forts(&gen("path:11")).is_err());
        assert_eq!(
            enumerate_forts(&example_2_1()).unwrap().len() as u64,
            fort_sequence(&example_2_1()).unwrap().total()
        );
    }

    #[test]
    fn zero_forcing_examples() {
        let p = gen("path:6");
        assert_eq!(zf_closure(&p, set(&[0])).unwrap(), p.vertices());
        assert!(is_zero_forcing_set(&p, set(&[5])).unwrap());
        assert!(!is_zero_forcing_set(&p, set(&[2])).unwrap());
        let c = gen("cycle:6");
        assert!(!is_zero_forcing_set(&c, set(&[3])).unwrap());
        assert!(is_zero_forcing_set(&c, set(&[3, 4])).unwrap());
        let f = gen("friendship:3");
        assert_eq!(zf_closure(&f, set(&[0])).unwrap(), set(&[0]));
        assert_eq!(zf_closure(&f, f.vertices()).unwrap(), f.vertices());
    }

    #[test]
    fn failed_zero_forcing_values() {
        assert_eq!(failed_zero_forcing_number(&example_2_1()), 3);
        assert_eq!(failed_zero_forcing_number(&gen("path:3")), 1);
        for n in 2..8 {
            assert_eq!(failed_zero_forcing_number(&gen(&format!("complete:{n}"))), n - 2);
        }
        assert_eq!(zero_blocking_number(&example_2_1()), 2);
    }
}
