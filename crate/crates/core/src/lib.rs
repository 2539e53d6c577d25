pub mod collapse;
pub mod complex;
pub mod error;
pub mod exact;
pub mod generate;
pub mod geometry;
pub mod homology;
pub mod io;
pub mod lp;
pub mod matroid;
pub mod oracle;
pub mod rational;
pub mod suite;
pub mod theorems;
pub mod tverberg;

pub use complex::{Simplex, SimplicialComplex, VertexId};
pub use error::{Error, Result};
