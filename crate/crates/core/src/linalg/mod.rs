//! Exact rational linear algebra for symmetric matrices with a graph pattern.

mod elimination;
mod generic;
pub mod io;
mod matrix;
mod psd;
mod spark;
mod vertex;

pub use elimination::{determinant, in_column_space, null_basis, nullity, primitive, rank, rref, NullBasis};
pub use generic::{
    generic_nullity, is_generic, is_generic_with_limit, GenericNullityOptions, GenericNullityReport,
    DEFAULT_GENERIC_LIMIT,
};
pub use io::{format_matrix, parse_matrix};
pub use matrix::{int, ratio, Rational, RationalMatrix};
pub use psd::is_positive_semidefinite;
pub use spark::{
    full_spark_check, graph_of, matrix_spark, matrix_spark_with, FullSparkReport, SparkCertificate, SubsetScreen,
};
pub use vertex::{null_support, parter_fiedler, VertexClass, VertexClassification};
