//! Per-vertex null-space structure: Parter/Fiedler classification and the
//! support of the null space.

use serde::Serialize;

use super::elimination::{null_basis, nullity};
use super::matrix::RationalMatrix;
use crate::error::{Error, Result};
use crate::graph::{VertexSet, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexClass {
    /// `nul(A(v)) = nul(A) + 1`.
    Parter,
    /// `nul(A(v)) = nul(A)`.
    FiedlerNotParter,
    /// `nul(A(v)) = nul(A) - 1`.
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexClassification {
    pub vertex: usize,
    pub class: VertexClass,
    pub nullity: usize,
    pub deleted_nullity: usize,
    /// Set when `A` is nonsingular. The Fiedler inequality `nul(A(v)) >= 0`
    /// then holds for every vertex, so none is `Neither`.
    pub nonsingular: bool,
}

impl VertexClassification {
    pub fn is_fiedler(&self) -> bool {
        self.class != VertexClass::Neither
    }
}

/// Classifies `v` by comparing the nullities of `A` and `A(v)`.
pub fn parter_fiedler(a: &RationalMatrix, v: usize) -> Result<VertexClassification> {
    if !a.is_symmetric() {
        return Err(Error::Domain("vertex classification needs a symmetric matrix".into()));
    }
    if v >= a.rows() {
        return Err(Error::Domain(format!("vertex {v} out of range 0..{}", a.rows())));
    }
    let nul = nullity(a);
    let deleted = a.delete_vertex(v).map_or(0, |d| nullity(&d));
    let class = if deleted == nul + 1 {
        VertexClass::Parter
    } else if deleted >= nul {
        VertexClass::FiedlerNotParter
    } else {
        VertexClass::Neither
    };
    Ok(VertexClassification {
        vertex: v,
        class,
        nullity: nul,
        deleted_nullity: deleted,
        nonsingular: nul == 0,
    })
}

/// `{i : x_i != 0 for some x in N(A)}`, the union of the supports of any
/// null basis.
pub fn null_support(a: &RationalMatrix) -> Result<VertexSet> {
    if a.cols() > MAX_VERTICES {
        return Err(Error::Capacity(format!("{} columns exceeds {MAX_VERTICES}", a.cols())));
    }
    let mut s = VertexSet::EMPTY;
    for x in null_basis(a).vectors {
        for (i, q) in x.iter().enumerate() {
            if !num_traits::Zero::is_zero(q) {
                s.insert(i);
            }
        }
    }
    Ok(s)
}
