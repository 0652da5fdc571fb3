use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Shorthand for `p/q`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Dense row-major matrix of exact rationals. Immutable once built; the
/// symmetry tag is computed at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
    symmetric: bool,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        let symmetric =
            rows == cols && (0..rows).all(|i| (i + 1..cols).all(|j| data[i * cols + j] == data[j * cols + i]));
        Ok(RationalMatrix {
            rows,
            cols,
            data,
            symmetric,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != c) {
            return Err(Error::Dimension(format!(
                "row {i} has {} entries, expected {c}",
                row.len()
            )));
        }
        RationalMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Rational::one();
        }
        RationalMatrix::new(n, n, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        RationalMatrix::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Rational>]) -> Result<Self> {
        let c = columns.len();
        let r = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|col| col.len() != r) {
            return Err(Error::Dimension("columns have different lengths".into()));
        }
        let mut data = Vec::with_capacity(r * c);
        for i in 0..r {
            for col in columns {
                data.push(col[i].clone());
            }
        }
        RationalMatrix::new(r, c, data)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        RationalMatrix::new(self.cols, self.rows, data).expect("same size")
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = vec![Rational::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        RationalMatrix::new(self.rows, other.cols, data)
    }

    /// Submatrix on the given rows and columns (both nonempty).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<RationalMatrix> {
        if rows.iter().any(|&i| i >= self.rows) || cols.iter().any(|&j| j >= self.cols) {
            return Err(Error::Dimension("submatrix index out of range".into()));
        }
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        RationalMatrix::new(rows.len(), cols.len(), data)
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> Result<RationalMatrix> {
        self.submatrix(idx, idx)
    }

    /// `A(v)`: the principal submatrix with row and column `v` deleted.
    /// `None` for a 1x1 matrix.
    pub fn delete_vertex(&self, v: usize) -> Option<RationalMatrix> {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| i != v).collect();
        if keep.is_empty() {
            None
        } else {
            self.principal_submatrix(&keep).ok()
        }
    }

    /// Copy with `delta` added to entry `(i, j)`.
    pub fn with_added(&self, i: usize, j: usize, delta: &Rational) -> RationalMatrix {
        let mut data = self.data.clone();
        data[i * self.cols + j] += delta;
        RationalMatrix::new(self.rows, self.cols, data).expect("same size")
    }

    pub fn is_zero_vector(x: &[Rational]) -> bool {
        x.iter().all(Zero::is_zero)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::io::format_matrix(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_are_validated() {
        assert!(RationalMatrix::new(0, 3, vec![]).is_err());
        assert!(RationalMatrix::new(2, 2, vec![int(1)]).is_err());
        assert!(RationalMatrix::from_integers(&[vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn symmetry_tag() {
        assert!(RationalMatrix::from_integers(&[[1, 2], [2, 5]]).unwrap().is_symmetric());
        assert!(!RationalMatrix::from_integers(&[[1, 2], [3, 5]]).unwrap().is_symmetric());
        assert!(!RationalMatrix::from_integers(&[[1, 2, 3]]).unwrap().is_symmetric());
    }

    #[test]
    fn products() {
        let a = RationalMatrix::from_integers(&[[1, 2], [3, 4]]).unwrap();
        let b = RationalMatrix::from_integers(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(
            a.mul(&b).unwrap(),
            RationalMatrix::from_integers(&[[2, 1], [4, 3]]).unwrap()
        );
        assert_eq!(a.mul_vec(&[int(1), ratio(-1, 2)]).unwrap(), vec![int(0), int(1)]);
        assert_eq!(a.transpose().get(0, 1), &int(3));
    }

    #[test]
    fn deleting_a_vertex() {
        let a = RationalMatrix::from_integers(&[[1, 2, 3], [2, 4, 5], [3, 5, 6]]).unwrap();
        let d = a.delete_vertex(1).unwrap();
        assert_eq!(d, RationalMatrix::from_integers(&[[1, 3], [3, 6]]).unwrap());
        assert!(RationalMatrix::identity(1).unwrap().delete_vertex(0).is_none());
    }
}
