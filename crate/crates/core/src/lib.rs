//! Direct evaluation of the Schmidt measure, relative entropy of entanglement
//! and geometric measure for pure graph states.

pub mod alt_css;
pub mod error;
pub mod graph;
pub mod lattices;
pub mod measures;
pub mod oracle;
pub mod stabilizer;

pub use error::{Error, GraphError, Result, StabilizerError};
pub use graph::{Graph, Matching, VertexSet};
