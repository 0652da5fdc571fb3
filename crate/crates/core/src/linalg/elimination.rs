//! Exact elimination kernels.
//!
//! Rank and determinants use Bareiss fraction-free elimination over the
//! integers (each row is first scaled by the lcm of its denominators, which
//! preserves rank and scales the determinant by a known factor). The null
//! space is read off a reduced row echelon form computed over the
//! rationals, which is an independent route to the nullity.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{Rational, RationalMatrix};

/// Rows of the selected submatrix, each scaled to integers. Returns the rows
/// and the product of the scale factors.
fn integer_rows(a: &RationalMatrix, rows: &[usize], cols: &[usize]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale_product = BigInt::one();
    let out = rows
        .iter()
        .map(|&i| {
            let lcm = cols.iter().fold(BigInt::one(), |acc, &j| acc.lcm(a.get(i, j).denom()));
            let row = cols
                .iter()
                .map(|&j| {
                    let q = a.get(i, j);
                    q.numer() * (&lcm / q.denom())
                })
                .collect();
            scale_product *= &lcm;
            row
        })
        .collect();
    (out, scale_product)
}

/// Bareiss elimination in place. Returns the rank, the number of row swaps
/// and the last pivot (the determinant up to sign for full-rank square input).
fn bareiss(m: &mut [Vec<BigInt>]) -> (usize, usize, BigInt) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut swaps = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            swaps += 1;
        }
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            for j in c + 1..cols {
                let num = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = num / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    (r, swaps, prev)
}

pub(crate) fn rank_of(a: &RationalMatrix, rows: &[usize], cols: &[usize]) -> usize {
    let (mut m, _) = integer_rows(a, rows, cols);
    bareiss(&mut m).0
}

/// Whether the square submatrix on `rows x cols` is nonsingular. An empty
/// selection is treated as the 0x0 matrix, which is nonsingular.
pub(crate) fn minor_nonsingular(a: &RationalMatrix, rows: &[usize], cols: &[usize]) -> bool {
    debug_assert_eq!(rows.len(), cols.len());
    if rows.is_empty() {
        return true;
    }
    rank_of(a, rows, cols) == rows.len()
}

fn all(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Exact rank by Bareiss elimination.
pub fn rank(a: &RationalMatrix) -> usize {
    rank_of(a, &all(a.rows()), &all(a.cols()))
}

/// `cols - rank`.
pub fn nullity(a: &RationalMatrix) -> usize {
    a.cols() - rank(a)
}

/// Exact determinant of a square matrix (`None` if not square).
pub fn determinant(a: &RationalMatrix) -> Option<Rational> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows();
    let (mut m, scale) = integer_rows(a, &all(n), &all(n));
    let (r, swaps, last) = bareiss(&mut m);
    if r < n {
        return Some(Rational::zero());
    }
    let signed = if swaps % 2 == 1 { -last } else { last };
    Some(Rational::new(signed, scale))
}

/// Reduced row echelon form over the rationals with the pivot columns.
pub fn rref(a: &RationalMatrix) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m = a.to_rows();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let delta = &factor * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Scales a nonzero rational vector to coprime integers with a positive
/// first nonzero entry.
pub fn primitive(x: &[Rational]) -> Vec<Rational> {
    let lcm = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = x.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return x.to_vec();
    }
    if ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
        g = -g;
    }
    ints.into_iter().map(|v| Rational::from_integer(v / &g)).collect()
}

/// A basis of the null space `{x : Ax = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullBasis {
    /// Number of coordinates of each vector (the column count of `A`).
    pub len: usize,
    pub vectors: Vec<Vec<Rational>>,
}

impl NullBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Basis vectors as the columns of an `n x d` matrix (`None` if `d = 0`).
    pub fn as_matrix(&self) -> Option<RationalMatrix> {
        if self.vectors.is_empty() {
            None
        } else {
            RationalMatrix::from_columns(&self.vectors).ok()
        }
    }

    /// Checks `A x = 0` entrywise for every basis vector.
    pub fn annihilated_by(&self, a: &RationalMatrix) -> bool {
        self.vectors
            .iter()
            .all(|x| a.mul_vec(x).is_ok_and(|y| RationalMatrix::is_zero_vector(&y)))
    }
}

/// Null space basis from the reduced row echelon form: one vector per free
/// column, scaled to primitive integers.
pub fn null_basis(a: &RationalMatrix) -> NullBasis {
    let (m, pivots) = rref(a);
    let n = a.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m[row][free].clone();
            }
            primitive(&v)
        })
        .collect();
    let basis = NullBasis { len: n, vectors };
    debug_assert!(basis.annihilated_by(a));
    basis
}

/// Whether `b` lies in the column space of `a`.
pub fn in_column_space(a: &RationalMatrix, b: &[Rational]) -> bool {
    if b.len() != a.rows() {
        return false;
    }
    let mut rows = a.to_rows();
    for (row, v) in rows.iter_mut().zip(b) {
        row.push(v.clone());
    }
    let aug = RationalMatrix::from_rows(rows).expect("nonempty");
    rank(&aug) == rank(a)
}
