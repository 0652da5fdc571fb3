use num_traits::{Signed, Zero};

use super::matrix::RationalMatrix;
use crate::error::{Error, Result};

/// Exact positive semidefiniteness test by symmetric elimination.
///
/// Repeatedly pivots on a positive diagonal entry and replaces the rest by
/// its Schur complement. A negative diagonal entry, or a zero diagonal entry
/// with a nonzero entry in its row, rules out semidefiniteness.
pub fn is_positive_semidefinite(a: &RationalMatrix) -> Result<bool> {
    if !a.is_symmetric() {
        return Err(Error::Domain("semidefiniteness needs a symmetric matrix".into()));
    }
    let mut m = a.to_rows();
    let mut live: Vec<usize> = (0..a.rows()).collect();
    loop {
        if live.iter().any(|&i| m[i][i].is_negative()) {
            return Ok(false);
        }
        for &i in &live {
            if m[i][i].is_zero() && live.iter().any(|&j| !m[i][j].is_zero()) {
                return Ok(false);
            }
        }
        let Some(pos) = live.iter().position(|&i| m[i][i].is_positive()) else {
            return Ok(true);
        };
        let p = live.swap_remove(pos);
        let pivot = m[p][p].clone();
        for &i in &live {
            if m[i][p].is_zero() {
                continue;
            }
            let factor = &m[i][p] / &pivot;
            for &j in &live {
                let delta = &factor * &m[p][j];
                m[i][j] -= delta;
            }
        }
    }
}
