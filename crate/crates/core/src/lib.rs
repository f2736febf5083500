//! Exact computations with quiver algebras, torsion classes and tilting modules
//! attached to co-c-sortable Coxeter words.

pub mod coxeter;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod pipeline;
pub mod quiver;
pub mod rep;
pub mod tilting;
pub mod torsion;
pub mod word_quiver;

pub use error::{Error, Result};
