use graphspark::constructions::{border, laplacian, matrix_from_fort, rank_bump, FortVectorAssignment};
use graphspark::corpus::{connected_graphs_up_to, high_nullity_matrix, random_connected_graph, singular_matrix};
use graphspark::forts::{enumerate_forts, is_fort, spark};
use graphspark::graph::{FamilySpec, Graph, VertexSet};
use graphspark::linalg::{
    full_spark_check, generic_nullity, graph_of, in_column_space, int, is_generic, matrix_spark, matrix_spark_with,
    null_basis, null_support, nullity, parter_fiedler, rank, GenericNullityOptions, Rational, RationalMatrix,
    SubsetScreen, VertexClass,
};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn family(s: &str) -> Graph {
    s.parse::<FamilySpec>().unwrap().generate().unwrap()
}

fn arb_symmetric(max_n: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((-3i64..=3, 1i64..=2, any::<bool>()), n * (n + 1) / 2).prop_map(move |cells| {
            let mut rows = vec![vec![Rational::zero(); n]; n];
            let mut it = cells.into_iter();
            for i in 0..n {
                for j in i..n {
                    let (p, q, keep) = it.next().unwrap();
                    let v = if keep {
                        Rational::new(p.into(), q.into())
                    } else {
                        Rational::zero()
                    };
                    rows[i][j] = v.clone();
                    rows[j][i] = v;
                }
            }
            RationalMatrix::from_rows(rows).unwrap()
        })
    })
}

fn support(x: &[Rational]) -> VertexSet {
    VertexSet::from_indices((0..x.len()).filter(|&i| !x[i].is_zero())).unwrap()
}

proptest! {
    #[test]
    fn rank_plus_nullity(a in arb_symmetric(7)) {
        prop_assert_eq!(rank(&a) + nullity(&a), a.cols());
        prop_assert!(null_basis(&a).annihilated_by(&a));
    }

    #[test]
    fn spark_bounds_and_screens(a in arb_symmetric(6)) {
        let c = matrix_spark(&a).unwrap();
        prop_assert!(c.spark <= rank(&a) + 1);
        prop_assert_eq!(&c, &matrix_spark_with(&a, SubsetScreen::Exhaustive).unwrap());
        if c.spark <= a.cols() {
            prop_assert_eq!(support(&c.witness), c.support);
            prop_assert!(is_fort(&graph_of(&a).unwrap(), c.support).unwrap());
        }
    }

    #[test]
    fn null_support_and_column_space(a in arb_symmetric(7), seed in any::<u64>()) {
        let n = a.cols();
        let ns = null_support(&a).unwrap();
        for j in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[j] = int(1);
            prop_assert_eq!(in_column_space(&a, &e), !ns.contains(j));
            prop_assert_eq!(parter_fiedler(&a, j).unwrap().is_fiedler(), !ns.contains(j));
        }
        // another basis has the same support
        let basis = null_basis(&a);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut union = VertexSet::EMPTY;
        for _ in 0..basis.dimension() {
            let c: Vec<i64> = (0..basis.dimension()).map(|_| rng.random_range(-1000..=1000)).collect();
            let v: Vec<Rational> = (0..n)
                .map(|i| c.iter().zip(&basis.vectors).fold(Rational::zero(), |acc, (k, b)| acc + Rational::from_integer((*k).into()) * &b[i]))
                .collect();
            union = union | support(&v);
        }
        prop_assert_eq!(union, ns);
    }

    #[test]
    fn border_keeps_rank(a in arb_symmetric(6), xs in proptest::collection::vec(-2i64..=2, 6)) {
        let x: Vec<Rational> = xs[..a.cols()].iter().map(|&v| int(v)).collect();
        let b = border(&a, &x).unwrap();
        prop_assert_eq!(rank(&b), rank(&a));
        let mut y = vec![int(-1)];
        y.extend(x.iter().cloned());
        prop_assert!(RationalMatrix::is_zero_vector(&b.mul_vec(&y).unwrap()));
        prop_assert!(matrix_spark(&b).unwrap().spark <= support(&x).len() + 1);
    }
}

#[test]
fn supports_are_forts_for_every_small_pattern() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for g in connected_graphs_up_to(7).unwrap() {
        let (a, _) = singular_matrix(&mut rng, &g);
        let c = matrix_spark(&a).unwrap();
        assert!(is_fort(&graph_of(&a).unwrap(), c.support).unwrap(), "{g}");
    }
}

#[test]
fn full_spark_equivalence_for_small_patterns() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for g in connected_graphs_up_to(6).unwrap() {
        let (a, _) = singular_matrix(&mut rng, &g);
        assert!(full_spark_check(&a).unwrap().conditions_agree(), "{g}");
    }
}

#[test]
fn every_fort_round_trips_through_a_matrix() {
    for g in connected_graphs_up_to(7).unwrap() {
        for f in enumerate_forts(&g).unwrap() {
            let fva = FortVectorAssignment::ones(f).unwrap();
            let a = matrix_from_fort(&g, &fva).unwrap();
            assert!(RationalMatrix::is_zero_vector(
                &a.mul_vec(&fva.vector(g.order())).unwrap()
            ));
            assert_eq!(graph_of(&a).unwrap(), g);
        }
    }
}

#[test]
fn minimum_fort_matrix_has_graph_spark() {
    for g in connected_graphs_up_to(7).unwrap() {
        let r = spark(&g);
        let a = matrix_from_fort(&g, &FortVectorAssignment::ones(r.minimum_fort).unwrap()).unwrap();
        assert_eq!(matrix_spark(&a).unwrap().spark, r.size, "{g}");
    }
}

#[test]
fn laplacian_row_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let n = rng.random_range(1..=12);
        let g = random_connected_graph(&mut rng, n).unwrap();
        let l = laplacian(&g);
        assert!(RationalMatrix::is_zero_vector(&l.mul_vec(&vec![int(1); n]).unwrap()));
    }
}

#[test]
fn bordering_a_nonsingular_matrix() {
    let a = RationalMatrix::from_integers(&[[2, 1, 0, 0], [1, 2, 1, 0], [0, 1, 2, 1], [0, 0, 1, 2]]).unwrap();
    for x in [[1, 0, 0, 0], [1, 0, -1, 0], [1, 2, 3, 4]] {
        let x: Vec<Rational> = x.iter().map(|&v| int(v)).collect();
        let b = border(&a, &x).unwrap();
        assert_eq!(rank(&b), 4);
        assert_eq!(matrix_spark(&b).unwrap().spark, support(&x).len() + 1);
    }
}

#[test]
fn repeated_bumps_keep_spark() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..60 {
        let n = rng.random_range(3..=7);
        let (mut a, _) = high_nullity_matrix(&mut rng, n);
        let s = matrix_spark(&a).unwrap().spark;
        let pattern = graph_of(&a).unwrap();
        while nullity(&a) >= 2 {
            let k = rank(&a);
            let r = rank_bump(&a).unwrap();
            assert_eq!(rank(&r.matrix), k + 1);
            assert_eq!(matrix_spark_with(&r.matrix, SubsetScreen::Exhaustive).unwrap().spark, s);
            assert_eq!(graph_of(&r.matrix).unwrap(), pattern);
            for v in &r.null_basis {
                assert!(RationalMatrix::is_zero_vector(&r.matrix.mul_vec(v).unwrap()));
            }
            a = r.matrix;
        }
    }
}

#[test]
fn k23_adjacency_has_no_fiedler_vertex() {
    let a = graphspark::constructions::adjacency(&family("kbip:2,3"));
    assert_eq!(rank(&a), 2);
    for v in 0..5 {
        assert_eq!(parter_fiedler(&a, v).unwrap().class, VertexClass::Neither);
    }
}

#[test]
fn generic_nullity_of_full_spark_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen = 0;
    for _ in 0..200 {
        let n = rng.random_range(2..=6);
        let g = random_connected_graph(&mut rng, n).unwrap();
        let (a, _) = singular_matrix(&mut rng, &g);
        let k = rank(&a);
        if matrix_spark(&a).unwrap().spark != k + 1 {
            continue;
        }
        seen += 1;
        let r = generic_nullity(&a, &GenericNullityOptions::default()).unwrap();
        assert!(r.exact && r.lower_bound == n - k);
        assert!(is_generic(r.witness.as_ref().unwrap()).unwrap());
    }
    assert!(seen > 20);
}
