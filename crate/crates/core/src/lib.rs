//! Laplacian spectral radius of unicyclic graphs with fixed girth.
//!
//! Graph constructions and surgeries, a dense symmetric eigensolver, an
//! isomorphism-free generator for unicyclic graphs, and executable checks of
//! the structural facts behind the minimality of `U(n, g)`.

pub mod canon;
pub mod constructors;
pub mod decompose;
pub mod edgelist;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod properties;
pub mod reproduce;
pub mod spectra;
pub mod theory;
pub mod transforms;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use decompose::{decompose_unicyclic, UnicyclicDecomposition};
pub use error::*;
pub use graph::{Edge, Graph};
