//! Seeded generators of symmetric rational matrices.

use num_traits::{One, Zero};
use rand::seq::IndexedRandom;
use rand::Rng;
use serde::Serialize;

use super::random_graph;
use crate::constructions::{laplacian, matrix_from_fort, FortVectorAssignment};
use crate::forts::{enumerate_forts, spark};
use crate::graph::Graph;
use crate::linalg::{determinant, nullity, Rational, RationalMatrix};

/// How a generated matrix was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixSource {
    /// Random entries on the pattern, one diagonal entry solved for `det = 0`.
    DiagonalFix,
    /// Built from a random fort with random values on it.
    Fort,
    /// `X D X^T` with a sparse integer `X`.
    LowRank,
    /// A nonsingular core bordered repeatedly, then relabelled.
    Bordered,
    /// Laplacian of a disconnected graph.
    Laplacian,
}

/// Nonzero rational with numerator in `-6..=6` and denominator in `1..=3`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let mut p = 0i64;
    while p == 0 {
        p = rng.random_range(-6..=6);
    }
    Rational::new(p.into(), rng.random_range(1i64..=3).into())
}

fn small_int<R: Rng + ?Sized>(rng: &mut R, zero_prob: f64) -> Rational {
    if rng.random_bool(zero_prob) {
        Rational::zero()
    } else {
        let v = rng.random_range(1i64..=3);
        Rational::from_integer(if rng.random_bool(0.5) { v } else { -v }.into())
    }
}

fn pattern_entries<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> Vec<Vec<Rational>> {
    let n = g.order();
    let mut a = vec![vec![Rational::zero(); n]; n];
    for (u, v) in g.edges() {
        let x = random_rational(rng);
        a[u][v] = x.clone();
        a[v][u] = x;
    }
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = if rng.random_bool(0.2) {
            Rational::zero()
        } else {
            random_rational(rng)
        };
    }
    a
}

/// Random matrix with pattern `g` made singular by solving for one diagonal
/// entry. The determinant is affine in that entry, with slope `det A(v)`.
/// Entries are redrawn when the slope vanishes for every vertex; `None` only
/// if that keeps happening.
pub fn singular_in_pattern<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> Option<RationalMatrix> {
    let n = g.order();
    for _ in 0..32 {
        let mut rows = pattern_entries(rng, g);
        let start = rng.random_range(0..n);
        for v in (0..n).map(|i| (start + i) % n) {
            let saved = std::mem::replace(&mut rows[v][v], Rational::zero());
            let a0 = RationalMatrix::from_rows(rows.clone()).ok()?;
            let slope = match a0.delete_vertex(v) {
                Some(sub) => determinant(&sub)?,
                None => Rational::one(),
            };
            if slope.is_zero() {
                rows[v][v] = saved;
                continue;
            }
            rows[v][v] = -determinant(&a0)? / slope;
            return RationalMatrix::from_rows(rows).ok();
        }
    }
    None
}

/// Random fort of `g` with random nonzero values, turned into a matrix.
fn fort_matrix<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> RationalMatrix {
    let fort = if g.order() <= 10 {
        *enumerate_forts(g)
            .expect("order checked")
            .choose(rng)
            .expect("V is a fort")
    } else {
        spark(g).minimum_fort
    };
    let values = (0..fort.len()).map(|_| random_rational(rng)).collect();
    let fva = FortVectorAssignment::new(fort, values).expect("values are nonzero");
    matrix_from_fort(g, &fva).expect("fort construction succeeds")
}

fn low_rank<R: Rng + ?Sized>(rng: &mut R, n: usize, r: usize) -> RationalMatrix {
    loop {
        let x: Vec<Vec<Rational>> = (0..n).map(|_| (0..r).map(|_| small_int(rng, 0.3)).collect()).collect();
        let d: Vec<Rational> = (0..r).map(|_| small_int(rng, 0.0)).collect();
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..r).fold(Rational::zero(), |acc, t| acc + &x[i][t] * &d[t] * &x[j][t]))
                    .collect()
            })
            .collect();
        let a = RationalMatrix::from_rows(rows).expect("n > 0");
        if !a.entries().iter().all(Zero::is_zero) {
            return a;
        }
    }
}

/// Random symmetric nonsingular `k x k` matrix with small rational entries.
pub fn random_nonsingular<R: Rng + ?Sized>(rng: &mut R, k: usize) -> RationalMatrix {
    loop {
        let g = random_graph(rng, k, 0.5).expect("k > 0");
        let mut rows = pattern_entries(rng, &g);
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = random_rational(rng);
        }
        let a = RationalMatrix::from_rows(rows).expect("k > 0");
        if determinant(&a).is_some_and(|d| !d.is_zero()) {
            return a;
        }
    }
}

fn bordered<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> RationalMatrix {
    let mut a = random_nonsingular(rng, k);
    while a.rows() < n {
        let x: Vec<Rational> = (0..a.rows()).map(|_| small_int(rng, 0.4)).collect();
        a = crate::constructions::border(&a, &x).expect("symmetric with matching length");
    }
    let mut perm: Vec<usize> = (0..n).collect();
    rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), rng);
    a.principal_submatrix(&perm).expect("permutation of 0..n")
}

fn disconnected_laplacian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> RationalMatrix {
    loop {
        let g = random_graph(rng, n, 0.4).expect("n > 0");
        if g.components().len() >= 2 {
            return laplacian(&g);
        }
    }
}

/// Singular symmetric matrix of order `g.order()`. Most are in the pattern
/// class of `g`; a share are low-rank products whose pattern is whatever it
/// turns out to be.
pub fn singular_matrix<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> (RationalMatrix, MatrixSource) {
    let n = g.order();
    let roll = rng.random_range(0..100);
    if roll < 50 {
        if let Some(a) = singular_in_pattern(rng, g) {
            return (a, MatrixSource::DiagonalFix);
        }
    }
    if roll < 85 || n == 1 {
        return (fort_matrix(rng, g), MatrixSource::Fort);
    }
    let r = rng.random_range(1..n);
    (low_rank(rng, n, r), MatrixSource::LowRank)
}

/// Symmetric matrix of order `n >= 3` with nullity at least two.
pub fn high_nullity_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (RationalMatrix, MatrixSource) {
    assert!(n >= 3, "nullity two needs order at least three");
    loop {
        let (a, src) = match rng.random_range(0..4) {
            0 => {
                let r = rng.random_range(1..=n - 2);
                (low_rank(rng, n, r), MatrixSource::LowRank)
            }
            1 => {
                let k = rng.random_range(1..=n - 2);
                (bordered(rng, n, k), MatrixSource::Bordered)
            }
            2 => {
                let g = super::random_connected_graph(rng, n).expect("n fits");
                (fort_matrix(rng, &g), MatrixSource::Fort)
            }
            _ => (disconnected_laplacian(rng, n), MatrixSource::Laplacian),
        };
        if nullity(&a) >= 2 {
            return (a, src);
        }
    }
}

/// Singular matrix in the pattern class of a tree.
pub fn tree_matrix<R: Rng + ?Sized>(rng: &mut R, tree: &Graph) -> (RationalMatrix, MatrixSource) {
    if rng.random_bool(0.6) {
        if let Some(a) = singular_in_pattern(rng, tree) {
            return (a, MatrixSource::DiagonalFix);
        }
    }
    (fort_matrix(rng, tree), MatrixSource::Fort)
}

/// Gram matrix `X X^T` of a random sparse integer `n x r` matrix with no
/// zero row, so every diagonal entry is positive.
pub fn random_gram<R: Rng + ?Sized>(rng: &mut R, n: usize, r: usize) -> RationalMatrix {
    let x: Vec<Vec<Rational>> = (0..n)
        .map(|_| loop {
            let row: Vec<Rational> = (0..r).map(|_| small_int(rng, 0.35)).collect();
            if !RationalMatrix::is_zero_vector(&row) {
                break row;
            }
        })
        .collect();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..r).fold(Rational::zero(), |acc, t| acc + &x[i][t] * &x[j][t]))
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(rows).expect("n > 0")
}

/// Rank-4 positive semidefinite matrix whose pattern is the 3-cube.
///
/// Vertices are bit strings of length three. Even-weight vertices get the
/// standard basis of R^4; odd-weight vertices get the rows of a conference
/// matrix (orthogonal, zero diagonal), arranged so that each odd vertex is
/// orthogonal only to its antipode among the even ones. Every vector is then
/// scaled by a random nonzero rational and the columns by random signs.
pub fn conference_q3_gram<R: Rng + ?Sized>(rng: &mut R) -> RationalMatrix {
    const CONFERENCE: [[i64; 4]; 4] = [[0, 1, 1, 1], [1, 0, -1, 1], [1, 1, 0, -1], [1, -1, 1, 0]];
    let even = [0b000usize, 0b011, 0b101, 0b110];
    let odd = [0b111usize, 0b100, 0b010, 0b001];
    let signs: Vec<i64> = (0..4).map(|_| if rng.random_bool(0.5) { 1 } else { -1 }).collect();
    let mut vectors = vec![Vec::new(); 8];
    for (i, &v) in even.iter().enumerate() {
        vectors[v] = (0..4)
            .map(|c| Rational::from_integer(i64::from(c == i).into()))
            .collect();
    }
    // conference row i is zero in coordinate i, the antipode of odd[i]
    for (i, &v) in odd.iter().enumerate() {
        vectors[v] = (0..4)
            .map(|c| Rational::from_integer((CONFERENCE[i][c] * signs[c]).into()))
            .collect();
    }
    for v in vectors.iter_mut() {
        let s = random_rational(rng);
        for x in v.iter_mut() {
            *x *= &s;
        }
    }
    let rows = (0..8)
        .map(|i| {
            (0..8)
                .map(|j| {
                    vectors[i]
                        .iter()
                        .zip(&vectors[j])
                        .fold(Rational::zero(), |acc, (p, q)| acc + p * q)
                })
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(rows).expect("8 x 8")
}
