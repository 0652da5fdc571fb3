//! Spark of a matrix (fewest linearly dependent columns), the pattern graph
//! of a symmetric matrix, and the full-spark check relating principal
//! minors, null-basis minors and the spark.

use itertools::Itertools;
use serde::Serialize;

use super::elimination::{minor_nonsingular, null_basis, primitive, rank, rank_of};
use super::matrix::{Rational, RationalMatrix};
use crate::error::{Error, Result};
use crate::forts::is_fort;
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

fn check_width(a: &RationalMatrix) -> Result<()> {
    if a.cols() > MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "{} columns; vertex-set results support at most {MAX_VERTICES}",
            a.cols()
        )));
    }
    Ok(())
}

/// Off-diagonal nonzero pattern of a symmetric matrix.
pub fn graph_of(a: &RationalMatrix) -> Result<Graph> {
    if !a.is_symmetric() {
        return Err(Error::Domain("graph_of needs a symmetric matrix".into()));
    }
    check_width(a)?;
    let n = a.rows();
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for j in i + 1..n {
            if !num_traits::Zero::is_zero(a.get(i, j)) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// A minimum-support null vector, or the nonsingular convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparkCertificate {
    /// `cols + 1` when the columns are independent.
    pub spark: usize,
    pub support: VertexSet,
    /// Primitive integer null vector supported exactly on `support`; empty
    /// when the columns are independent.
    pub witness: Vec<Rational>,
}

/// How column subsets are screened during the spark search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetScreen {
    /// For symmetric input, skip subsets that are not forts of the pattern
    /// graph (a null-vector support always is one).
    Forts,
    /// Test every subset.
    Exhaustive,
}

/// Spark of `a` with fort screening for symmetric input.
pub fn matrix_spark(a: &RationalMatrix) -> Result<SparkCertificate> {
    matrix_spark_with(a, SubsetScreen::Forts)
}

/// Searches column subsets by increasing size, lexicographically within a
/// size, and stops at the first dependent one. Since all smaller subsets are
/// independent, that subset is a circuit: its null vector is unique up to
/// scale and has full support on it.
pub fn matrix_spark_with(a: &RationalMatrix, screen: SubsetScreen) -> Result<SparkCertificate> {
    check_width(a)?;
    let n = a.cols();
    let r = rank(a);
    if r == n {
        return Ok(SparkCertificate {
            spark: n + 1,
            support: VertexSet::EMPTY,
            witness: Vec::new(),
        });
    }
    let pattern = match screen {
        SubsetScreen::Forts if a.is_symmetric() => Some(graph_of(a)?),
        _ => None,
    };
    let all_rows: Vec<usize> = (0..a.rows()).collect();
    for size in 1..=r + 1 {
        for combo in (0..n).combinations(size) {
            let support = VertexSet::from_indices(combo.iter().copied())?;
            if let Some(g) = &pattern {
                if !is_fort(g, support)? {
                    continue;
                }
            }
            if rank_of(a, &all_rows, &combo) == size {
                continue;
            }
            let sub = a.submatrix(&all_rows, &combo)?;
            let local = null_basis(&sub);
            if local.dimension() != 1 {
                return Err(Error::Invariant(format!(
                    "minimal dependent column set {support} has a {}-dimensional kernel",
                    local.dimension()
                )));
            }
            let mut witness = vec![Rational::default(); n];
            for (k, &j) in combo.iter().enumerate() {
                witness[j] = local.vectors[0][k].clone();
            }
            return Ok(SparkCertificate {
                spark: size,
                support,
                witness: primitive(&witness),
            });
        }
    }
    Err(Error::Invariant(format!(
        "no dependent set of at most rank+1 = {} columns",
        r + 1
    )))
}

/// Outcome of checking whether a symmetric matrix has full spark, with the
/// three equivalent characterizations evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FullSparkReport {
    pub order: usize,
    pub rank: usize,
    pub spark: usize,
    /// `spark == rank + 1`.
    pub full_spark: bool,
    pub nonsingular: bool,
    /// Every `k x k` principal submatrix is nonsingular (`k` = rank).
    pub principal_minors_nonsingular: bool,
    /// Every `(n-k) x (n-k)` submatrix of the null basis is nonsingular.
    pub null_minors_nonsingular: bool,
    /// `spark == k + 1`, computed by testing column subsets directly.
    pub spark_condition: bool,
    /// Index sets of singular `k x k` principal submatrices.
    pub singular_principal: Vec<Vec<usize>>,
    /// Row sets of singular `(n-k) x (n-k)` null-basis submatrices.
    pub singular_null_minors: Vec<Vec<usize>>,
    /// Singular principal submatrices of size below `k`, which full spark
    /// does not rule out.
    pub smaller_singular_principal: Vec<Vec<usize>>,
}

impl FullSparkReport {
    pub fn conditions_agree(&self) -> bool {
        self.principal_minors_nonsingular == self.null_minors_nonsingular
            && self.null_minors_nonsingular == self.spark_condition
    }

    pub fn smallest_singular_sizes(&self) -> Vec<usize> {
        self.smaller_singular_principal
            .iter()
            .map(Vec::len)
            .sorted()
            .dedup()
            .collect()
    }
}

pub fn full_spark_check(a: &RationalMatrix) -> Result<FullSparkReport> {
    if !a.is_symmetric() {
        return Err(Error::Domain("full spark check needs a symmetric matrix".into()));
    }
    check_width(a)?;
    let n = a.rows();
    let k = rank(a);
    let cert = matrix_spark_with(a, SubsetScreen::Exhaustive)?;

    let singular_principal: Vec<Vec<usize>> = (0..n)
        .combinations(k)
        .filter(|idx| !minor_nonsingular(a, idx, idx))
        .collect();

    let mut singular_null_minors = Vec::new();
    if k < n {
        let basis = null_basis(a)
            .as_matrix()
            .ok_or_else(|| Error::Invariant("singular matrix with empty null basis".into()))?;
        let cols: Vec<usize> = (0..n - k).collect();
        singular_null_minors = (0..n)
            .combinations(n - k)
            .filter(|rows| !minor_nonsingular(&basis, rows, &cols))
            .collect();
    }

    let smaller_singular_principal = (1..k)
        .flat_map(|s| (0..n).combinations(s))
        .filter(|idx| !minor_nonsingular(a, idx, idx))
        .collect();

    Ok(FullSparkReport {
        order: n,
        rank: k,
        spark: cert.spark,
        full_spark: cert.spark == k + 1,
        nonsingular: k == n,
        principal_minors_nonsingular: singular_principal.is_empty(),
        null_minors_nonsingular: singular_null_minors.is_empty(),
        spark_condition: cert.spark == k + 1,
        singular_principal,
        singular_null_minors,
        smaller_singular_principal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::int;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_integers(rows).unwrap()
    }

    fn example_2_1() -> RationalMatrix {
        m(&[
            &[1, 1, 1, 0, 1],
            &[1, 1, 1, 0, 1],
            &[1, 1, 3, 1, 0],
            &[0, 0, 1, 3, 1],
            &[1, 1, 0, 1, 3],
        ])
    }

    fn k23() -> RationalMatrix {
        m(&[
            &[0, 0, 3, 1, 4],
            &[0, 2, 4, 4, 4],
            &[3, 4, -4, 0, 0],
            &[1, 4, 0, 4, 0],
            &[4, 4, 0, 0, 8],
        ])
    }

    #[test]
    fn example_2_1_spark_two() {
        let c = matrix_spark(&example_2_1()).unwrap();
        assert_eq!(c.spark, 2);
        assert_eq!(c.support.to_vec(), vec![0, 1]);
        assert_eq!(c.witness, vec![int(1), int(-1), int(0), int(0), int(0)]);
        assert_eq!(matrix_spark_with(&example_2_1(), SubsetScreen::Exhaustive).unwrap(), c);
    }

    #[test]
    fn example_2_1_pattern() {
        let g = graph_of(&example_2_1()).unwrap();
        let expected = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 4)]).unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn nonsingular_convention() {
        let c = matrix_spark(&RationalMatrix::identity(4).unwrap()).unwrap();
        assert_eq!(c.spark, 5);
        assert!(c.support.is_empty() && c.witness.is_empty());
    }

    #[test]
    fn k23_is_full_spark() {
        let r = full_spark_check(&k23()).unwrap();
        assert_eq!(r.rank, 3);
        assert_eq!(r.spark, 4);
        assert!(r.full_spark && r.conditions_agree());
        assert_eq!(r.smallest_singular_sizes(), vec![1, 2]);
        assert!(r.smaller_singular_principal.contains(&vec![0]));
        assert_eq!(
            graph_of(&k23()).unwrap(),
            crate::graph::FamilySpec::CompleteBipartite(2, 3).generate().unwrap()
        );
    }

    #[test]
    fn laplacian_p3_is_not_full_spark() {
        let l = m(&[&[1, -1, 0], &[-1, 2, -1], &[0, -1, 1]]);
        let r = full_spark_check(&l).unwrap();
        assert_eq!((r.rank, r.spark), (2, 3));
        assert!(
            r.full_spark,
            "P3 Laplacian: all-ones null vector, every 2x2 principal minor nonzero"
        );
        let z = m(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        let r = full_spark_check(&z).unwrap();
        assert_eq!((r.rank, r.spark), (2, 2));
        assert!(!r.full_spark && r.conditions_agree());
        assert_eq!(r.singular_principal, vec![vec![0, 2]]);
        assert_eq!(r.singular_null_minors, vec![vec![1]]);
    }

    #[test]
    fn non_symmetric_is_rejected() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert!(matches!(graph_of(&a), Err(Error::Domain(_))));
        assert!(full_spark_check(&a).is_err());
        // spark itself is defined for any matrix
        assert_eq!(matrix_spark(&m(&[&[1, 2, 3], &[2, 4, 7]])).unwrap().spark, 2);
    }
}
