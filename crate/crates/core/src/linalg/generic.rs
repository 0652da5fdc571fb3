//! Generic matrices (every square submatrix nonsingular) and a randomized
//! lower bound on the generic nullity of a matrix.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::elimination::{minor_nonsingular, null_basis};
use super::matrix::{Rational, RationalMatrix};
use crate::error::{Error, Result};

/// Default bound on `min(rows, cols)` for the exhaustive minor check.
pub const DEFAULT_GENERIC_LIMIT: usize = 6;

/// Whether every square submatrix of `x` is nonsingular, using
/// [`DEFAULT_GENERIC_LIMIT`].
pub fn is_generic(x: &RationalMatrix) -> Result<bool> {
    is_generic_with_limit(x, DEFAULT_GENERIC_LIMIT)
}

pub fn is_generic_with_limit(x: &RationalMatrix, limit: usize) -> Result<bool> {
    let max = x.rows().min(x.cols());
    if max > limit {
        return Err(Error::Capacity(format!(
            "exhaustive minor check limited to min(rows, cols) <= {limit}, got {max}"
        )));
    }
    if x.entries().iter().any(Zero::is_zero) {
        return Ok(false);
    }
    for size in 2..=max {
        for rows in (0..x.rows()).combinations(size) {
            for cols in (0..x.cols()).combinations(size) {
                if !minor_nonsingular(x, &rows, &cols) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericNullityOptions {
    /// Recombination coefficients are drawn from `[-bound, bound]`.
    pub bound: i64,
    pub trials: usize,
    pub seed: u64,
    pub limit: usize,
}

impl Default for GenericNullityOptions {
    fn default() -> Self {
        GenericNullityOptions {
            bound: 100,
            trials: 32,
            seed: 0,
            limit: DEFAULT_GENERIC_LIMIT,
        }
    }
}

/// Certified lower bound on the generic nullity.
///
/// `lower_bound = k` means a generic `n x k` matrix `X` with `AX = 0` was
/// found (`witness`). The true value lies in `lower_bound..=nullity`; the
/// search cannot prove that larger `k` are impossible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericNullityReport {
    pub nullity: usize,
    pub lower_bound: usize,
    /// True when `lower_bound == nullity`, so the value is exact.
    pub exact: bool,
    pub seed: u64,
    #[serde(skip)]
    pub witness: Option<RationalMatrix>,
}

/// Tries `k = nul(A), nul(A) - 1, ...`, each with random integer
/// recombinations `X = N C` of a null basis `N`, and stops at the first `k`
/// for which some `X` is generic.
pub fn generic_nullity(a: &RationalMatrix, opts: &GenericNullityOptions) -> Result<GenericNullityReport> {
    let basis = null_basis(a);
    let d = basis.dimension();
    if d > opts.limit {
        return Err(Error::Capacity(format!(
            "nullity {d} exceeds the generic-nullity limit {}",
            opts.limit
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let n = a.cols();
    for k in (1..=d).rev() {
        for _ in 0..opts.trials {
            let coeffs: Vec<Vec<BigInt>> = (0..d)
                .map(|_| {
                    (0..k)
                        .map(|_| BigInt::from(rng.random_range(-opts.bound..=opts.bound)))
                        .collect()
                })
                .collect();
            let columns: Vec<Vec<Rational>> = (0..k)
                .map(|c| {
                    (0..n)
                        .map(|i| {
                            (0..d).fold(Rational::zero(), |acc, b| {
                                acc + &basis.vectors[b][i] * Rational::from_integer(coeffs[b][c].clone())
                            })
                        })
                        .collect()
                })
                .collect();
            let x = RationalMatrix::from_columns(&columns)?;
            if is_generic_with_limit(&x, opts.limit.max(k))? {
                return Ok(GenericNullityReport {
                    nullity: d,
                    lower_bound: k,
                    exact: k == d,
                    seed: opts.seed,
                    witness: Some(x),
                });
            }
        }
    }
    Ok(GenericNullityReport {
        nullity: d,
        lower_bound: 0,
        exact: d == 0,
        seed: opts.seed,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::int;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_integers(rows).unwrap()
    }

    #[test]
    fn ones_column_is_generic() {
        let x = RationalMatrix::from_columns(&[vec![int(1); 5]]).unwrap();
        assert!(is_generic(&x).unwrap());
    }

    #[test]
    fn zero_entry_is_not_generic() {
        assert!(!is_generic(&m(&[&[1, 2], &[0, 3]])).unwrap());
    }

    #[test]
    fn vanishing_two_minor() {
        assert!(!is_generic(&m(&[&[1, 2], &[2, 4], &[1, 5]])).unwrap());
        assert!(is_generic(&m(&[&[1, 2], &[3, 4], &[5, 7]])).unwrap());
    }

    #[test]
    fn limit_is_enforced() {
        let x = RationalMatrix::from_integers(&vec![vec![1i64; 7]; 7]).unwrap();
        assert!(matches!(is_generic(&x), Err(Error::Capacity(_))));
    }

    #[test]
    fn laplacian_of_complete_graphs() {
        for n in 2..=5i64 {
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { n - 1 } else { -1 }).collect())
                .collect();
            let l = RationalMatrix::from_integers(&rows).unwrap();
            let r = generic_nullity(&l, &GenericNullityOptions::default()).unwrap();
            assert_eq!((r.nullity, r.lower_bound), (1, 1));
            assert!(r.exact);
        }
    }

    #[test]
    fn identity_has_zero() {
        let r = generic_nullity(&RationalMatrix::identity(3).unwrap(), &GenericNullityOptions::default()).unwrap();
        assert_eq!((r.nullity, r.lower_bound), (0, 0));
        assert!(r.witness.is_none());
    }

    #[test]
    fn rref_identity_block_is_recombined() {
        // null basis from RREF has zeros; recombination finds a generic one
        let a = m(&[&[1, 1, 1, 1]]);
        let basis = null_basis(&a).as_matrix().unwrap();
        assert!(!is_generic(&basis).unwrap());
        let r = generic_nullity(&a, &GenericNullityOptions::default()).unwrap();
        assert_eq!(r.lower_bound, 3);
        let x = r.witness.unwrap();
        assert!(is_generic(&x).unwrap());
        assert!(a.mul(&x).unwrap().entries().iter().all(Zero::is_zero));
    }
}
