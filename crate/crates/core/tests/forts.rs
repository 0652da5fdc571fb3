use graphspark::corpus::{connected_graphs, connected_graphs_up_to, random_graph};
use graphspark::forts::{
    enumerate_forts, every_subset_is_fort, failed_zero_forcing_number, fort_sequence, is_fort, is_zero_forcing_set,
    spark, spark_with, zero_blocking_number, zf_closure, FortReport, SearchMethod, ZeroForcingState,
};
use graphspark::graph::{FamilySpec, Graph, VertexSet};
use itertools::Itertools;
use proptest::prelude::*;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn family(s: &str) -> Graph {
    s.parse::<FamilySpec>().unwrap().generate().unwrap()
}

fn agree(g: &Graph) {
    let bb = spark_with(g, SearchMethod::BranchAndBound);
    let bf = spark_with(g, SearchMethod::BruteForce);
    assert_eq!(bb.size, bf.size, "{g}");
    // both return the lexicographically first minimum fort
    assert_eq!(bb.minimum_fort, bf.minimum_fort, "{g}");
    assert!(is_fort(g, bb.minimum_fort).unwrap());
}

#[test]
fn search_methods_agree_on_all_small_connected_graphs() {
    for g in connected_graphs_up_to(8).unwrap() {
        agree(&g);
    }
}

#[test]
#[ignore = "261080 graphs; run with --ignored"]
fn search_methods_agree_on_nine_vertices() {
    for g in connected_graphs(9).unwrap() {
        agree(&g);
    }
}

#[test]
fn search_methods_agree_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..500 {
        let n = rng.random_range(1..=16);
        let p = rng.random_range(0.1..0.9);
        agree(&random_graph(&mut rng, n, p).unwrap());
    }
}

#[test]
fn minimum_fort_is_minimum_against_enumeration() {
    for g in connected_graphs_up_to(6).unwrap() {
        let FortReport { size, .. } = spark(&g);
        let smallest = enumerate_forts(&g).unwrap().iter().map(|f| f.len()).min().unwrap();
        assert_eq!(size, smallest, "{g}");
    }
}

#[test]
fn closure_complement_is_a_fort() {
    for g in connected_graphs_up_to(8).unwrap() {
        let n = g.order();
        for bits in 0u64..1 << n {
            let rest = g.vertices() - zf_closure(&g, VertexSet::from_bits(bits)).unwrap();
            if !rest.is_empty() {
                assert!(is_fort(&g, rest).unwrap(), "{g} {bits:b}");
            }
        }
    }
}

#[test]
fn fort_complements_never_force() {
    for g in connected_graphs_up_to(8).unwrap() {
        for f in enumerate_forts(&g).unwrap() {
            assert!(!is_zero_forcing_set(&g, g.vertices() - f).unwrap(), "{g} {f}");
        }
    }
}

#[test]
fn subset_fort_properties() {
    for g in connected_graphs_up_to(8).unwrap() {
        let n = g.order();
        let flags: Vec<bool> = (1..=n).map(|k| every_subset_is_fort(&g, k)).collect();
        for k in 1..n {
            assert!(!flags[k - 1] || flags[k], "{g} k = {k}");
        }
        if g.min_degree() > 0 {
            for m in 1..=n {
                assert_eq!(flags[n - m], m <= g.min_degree(), "{g} m = {m}");
            }
        }
    }
}

#[test]
fn failed_forcing_against_brute_force() {
    for g in connected_graphs_up_to(7).unwrap() {
        let n = g.order();
        let largest = (0u64..1 << n)
            .map(VertexSet::from_bits)
            .filter(|&b| !is_zero_forcing_set(&g, b).unwrap())
            .map(VertexSet::len)
            .max()
            .unwrap();
        assert_eq!(failed_zero_forcing_number(&g), largest, "{g}");
        assert_eq!(zero_blocking_number(&g), n - largest, "{g}");
    }
}

#[test]
fn failed_forcing_examples() {
    let ex = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 4)]).unwrap();
    assert_eq!(failed_zero_forcing_number(&ex), 3);
    for n in 2..=7 {
        assert_eq!(failed_zero_forcing_number(&family(&format!("complete:{n}"))), n - 2);
    }
    assert_eq!(failed_zero_forcing_number(&family("path:3")), 1);
}

#[test]
fn friendship_examples() {
    let f3 = family("friendship:3");
    for s in (0..7).combinations(3) {
        assert!(!is_fort(&f3, VertexSet::from_indices(s).unwrap()).unwrap());
    }
    let center = VertexSet::singleton(0);
    assert_eq!(zf_closure(&f3, center).unwrap(), center);
}

#[test]
fn spider_minimum_fort_is_the_two_short_legs() {
    for m in 4..=10 {
        let sp = family(&format!("spider:{m},1,1"));
        let r = spark(&sp);
        assert_eq!(r.size, 2);
        assert_eq!(r.minimum_fort, VertexSet::from_indices([m + 1, m + 2]).unwrap());
        assert_eq!(fort_sequence(&sp).unwrap().count(2), 1);
    }
}

#[test]
fn forcing_examples() {
    for n in 2..=9 {
        let p = family(&format!("path:{n}"));
        assert!(is_zero_forcing_set(&p, VertexSet::singleton(0)).unwrap());
        let c = family(&format!("cycle:{}", n + 1));
        assert!(!is_zero_forcing_set(&c, VertexSet::singleton(0)).unwrap());
        assert_eq!(zf_closure(&c, c.vertices()).unwrap(), c.vertices());
    }
}

/// Applies randomly chosen available forces until none is left.
fn random_closure(g: &Graph, b: VertexSet, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut state = ZeroForcingState::new(g, b).unwrap();
    loop {
        let forcers: Vec<usize> = (0..g.order()).filter(|&v| state.force_target(v).is_some()).collect();
        let Some(&v) = forcers.choose(rng) else {
            return state.blue();
        };
        state.force_once_in([v]);
    }
}

proptest! {
    #[test]
    fn closure_is_order_independent(seed in any::<u64>(), n in 1usize..12, p in 0.1f64..0.9, bits in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, p).unwrap();
        let b = VertexSet::from_bits(bits) & g.vertices();
        let expected = zf_closure(&g, b).unwrap();
        for _ in 0..4 {
            prop_assert_eq!(random_closure(&g, b, &mut rng), expected);
        }
    }

    #[test]
    fn sequence_sums_to_enumeration(seed in any::<u64>(), n in 1usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.5).unwrap();
        let seq = fort_sequence(&g).unwrap();
        let forts = enumerate_forts(&g).unwrap();
        prop_assert_eq!(seq.total(), forts.len() as u64);
        for f in &forts {
            prop_assert!(is_fort(&g, *f).unwrap());
        }
    }
}
