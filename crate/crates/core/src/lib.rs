//! Exact computation of face-enumeration invariants of simplicial complexes
//! and their triangulations: h-polynomials, local h-polynomials and theta
//! polynomials of homology balls, along with the subdivision constructions
//! and homological classifications they depend on.

pub mod complex;
pub mod error;
pub mod harness;
pub mod homology;
pub mod invariants;
pub mod par;
pub mod poly;
pub mod subdivision;

pub use complex::{Face, LabelTable, SimplicialComplex, VertexId};
pub use error::{Error, Result};
pub use homology::{FieldChoice, HomologyProfile, VerifiedBall};
pub use poly::IntPoly;
pub use subdivision::Triangulation;
