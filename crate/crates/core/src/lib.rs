pub mod constructions;
pub mod corpus;
pub mod error;
pub mod forts;
pub mod graph;
pub mod linalg;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{FamilySpec, Graph, VertexSet};
