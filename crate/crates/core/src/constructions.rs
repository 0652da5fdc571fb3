//! Matrices built from graphs: Laplacian and adjacency, a matrix in the
//! pattern class with a prescribed fort as null-vector support, bordering,
//! and a diagonal rank increase that keeps the spark.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forts::is_fort;
use crate::graph::{Graph, VertexSet};
use crate::linalg::{graph_of, in_column_space, matrix_spark, null_basis, rank, Rational, RationalMatrix};

pub fn laplacian(g: &Graph) -> RationalMatrix {
    let n = g.order();
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for (u, v) in g.edges() {
        rows[u][v] = -Rational::one();
        rows[v][u] = -Rational::one();
    }
    for (v, row) in rows.iter_mut().enumerate() {
        row[v] = Rational::from_integer(g.degree(v).into());
    }
    RationalMatrix::from_rows(rows).expect("order is positive")
}

pub fn adjacency(g: &Graph) -> RationalMatrix {
    let n = g.order();
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for (u, v) in g.edges() {
        rows[u][v] = Rational::one();
        rows[v][u] = Rational::one();
    }
    RationalMatrix::from_rows(rows).expect("order is positive")
}

/// Nonzero values on the vertices of a fort.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FortVectorAssignment {
    fort: VertexSet,
    /// Ascending vertex order, one value per fort vertex.
    values: Vec<Rational>,
}

impl FortVectorAssignment {
    pub fn new(fort: VertexSet, values: Vec<Rational>) -> Result<Self> {
        if fort.is_empty() {
            return Err(Error::Domain("fort must be nonempty".into()));
        }
        if values.len() != fort.len() {
            return Err(Error::Dimension(format!(
                "{} values for a set of size {}",
                values.len(),
                fort.len()
            )));
        }
        if let Some(pos) = values.iter().position(Zero::is_zero) {
            return Err(Error::Domain(format!(
                "value for vertex {} is zero",
                fort.to_vec()[pos]
            )));
        }
        Ok(FortVectorAssignment { fort, values })
    }

    pub fn ones(fort: VertexSet) -> Result<Self> {
        Self::new(fort, vec![Rational::one(); fort.len()])
    }

    pub fn fort(&self) -> VertexSet {
        self.fort
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// The length-`n` vector with these values on the fort and zeros elsewhere.
    pub fn vector(&self, n: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); n];
        for (v, val) in self.fort.iter().zip(&self.values) {
            x[v] = val.clone();
        }
        x
    }
}

/// Builds `A` with pattern `g` and `A x = 0`, where `x` is the assignment
/// extended by zeros.
///
/// Starting from the adjacency matrix, every vertex `i` outside the fort
/// with fort neighbours `B` gets `A[i][j] = 1/x_j` for `j` in `B` except its
/// largest element `m`, and `A[i][m] = (1 - |B|)/x_m`. The diagonal on the
/// fort is then chosen to zero the remaining rows of `A x`.
pub fn matrix_from_fort(g: &Graph, fva: &FortVectorAssignment) -> Result<RationalMatrix> {
    let n = g.order();
    let fort = fva.fort;
    if !is_fort(g, fort)? {
        return Err(Error::Domain(format!("{fort} is not a fort of the graph")));
    }
    let x = fva.vector(n);
    let mut a = adjacency(g).to_rows();

    for i in fort.complement(n).iter() {
        let b = g.neighbors(i) & fort;
        let Some(max) = b.last() else { continue };
        let size = Rational::from_integer(b.len().into());
        for j in b.iter() {
            let entry = if j == max {
                (Rational::one() - &size) / &x[j]
            } else {
                Rational::one() / &x[j]
            };
            if entry.is_zero() {
                return Err(Error::Construction(format!("entry ({i}, {j}) would vanish")));
            }
            a[i][j] = entry.clone();
            a[j][i] = entry;
        }
    }

    for k in fort.iter() {
        let off: Rational = (0..n)
            .filter(|&j| j != k)
            .fold(Rational::zero(), |acc, j| acc + &a[k][j] * &x[j]);
        a[k][k] = -off / &x[k];
    }

    let a = RationalMatrix::from_rows(a)?;
    if !RationalMatrix::is_zero_vector(&a.mul_vec(&x)?) {
        return Err(Error::Invariant("constructed matrix does not annihilate x".into()));
    }
    if graph_of(&a)? != *g {
        return Err(Error::Invariant("constructed matrix lost the graph pattern".into()));
    }
    Ok(a)
}

/// `[[x^T A x, x^T A], [A x, A]]`.
pub fn border(a: &RationalMatrix, x: &[Rational]) -> Result<RationalMatrix> {
    if !a.is_symmetric() {
        return Err(Error::Domain("border needs a symmetric matrix".into()));
    }
    if x.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "vector of length {} for order {}",
            x.len(),
            a.rows()
        )));
    }
    let ax = a.mul_vec(x)?;
    let corner = x.iter().zip(&ax).fold(Rational::zero(), |acc, (p, q)| acc + p * q);
    let mut rows = Vec::with_capacity(a.rows() + 1);
    let mut top = vec![corner];
    top.extend(ax.iter().cloned());
    rows.push(top);
    for (i, v) in ax.into_iter().enumerate() {
        let mut row = vec![v];
        row.extend(a.row(i).iter().cloned());
        rows.push(row);
    }
    RationalMatrix::from_rows(rows)
}

/// Result of [`rank_bump`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankBump {
    #[serde(skip)]
    pub matrix: RationalMatrix,
    /// The diagonal entry that was increased by one.
    pub vertex: usize,
    pub rank: usize,
    pub spark: usize,
    /// Basis of the new null space: the minimum-support vector first, then
    /// the recombined vectors vanishing at `vertex`.
    #[serde(skip)]
    pub null_basis: Vec<Vec<Rational>>,
}

fn support(x: &[Rational]) -> VertexSet {
    VertexSet::from_bits(
        x.iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .fold(0u64, |acc, (i, _)| acc | 1 << i),
    )
}

/// Adds one to a diagonal entry so the rank goes up by one and the spark is
/// unchanged.
///
/// `eta1` is the lexicographically first minimum-support null vector and
/// `eta2` the first null-basis vector independent of it. The entry changed
/// is the least `j` in `supp(eta2) \ supp(eta1)`; the other basis vectors are
/// recombined with `eta2` so that they vanish at `j`.
pub fn rank_bump(a: &RationalMatrix) -> Result<RankBump> {
    if !a.is_symmetric() {
        return Err(Error::Domain("rank_bump needs a symmetric matrix".into()));
    }
    let n = a.rows();
    let k = rank(a);
    if k + 1 >= n {
        return Err(Error::Precondition(format!("rank {k} is not below n - 1 = {}", n - 1)));
    }
    let cert = matrix_spark(a)?;
    let eta1 = cert.witness;
    let s1 = cert.support;

    // extend eta1 to a basis using the computed null basis
    let mut basis = vec![eta1.clone()];
    for v in null_basis(a).vectors {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if rank(&RationalMatrix::from_columns(&trial)?) == trial.len() {
            basis.push(v);
        }
    }
    if basis.len() != n - k {
        return Err(Error::Invariant("null basis extension has the wrong size".into()));
    }
    let eta2 = basis[1].clone();
    let j = (support(&eta2) - s1)
        .first()
        .ok_or_else(|| Error::Invariant("second null vector has support inside the first".into()))?;

    let mut new_basis = vec![eta1];
    for eta in &basis[2..] {
        let c = &eta[j] / &eta2[j];
        new_basis.push(eta2.iter().zip(eta).map(|(p, q)| &c * p - q).collect());
    }

    let mut e_j = vec![Rational::zero(); n];
    e_j[j] = Rational::one();
    if in_column_space(a, &e_j) {
        return Err(Error::Invariant(format!("e_{j} lies in the column space")));
    }
    let b = a.with_added(j, j, &Rational::one());
    let new_rank = rank(&b);
    let new_spark = matrix_spark(&b)?.spark;
    if new_rank != k + 1 || new_spark != cert.spark {
        return Err(Error::Invariant(format!(
            "bump at {j} gave rank {new_rank} and spark {new_spark}, expected {} and {}",
            k + 1,
            cert.spark
        )));
    }
    if new_basis
        .iter()
        .any(|v| !RationalMatrix::is_zero_vector(&b.mul_vec(v).expect("square")))
    {
        return Err(Error::Invariant(
            "recombined vector is not in the new null space".into(),
        ));
    }
    Ok(RankBump {
        matrix: b,
        vertex: j,
        rank: new_rank,
        spark: new_spark,
        null_basis: new_basis,
    })
}
