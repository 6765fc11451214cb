//! Exact linear representations of mapping class groups of nonorientable
//! surfaces, with the symbolic machinery used to classify them.

pub mod algebra;
pub mod constraints;
mod error;
pub mod homology;
pub mod mod2;
pub mod scenarios;
pub mod surface;

pub use algebra::{AnyMatrix, Domain, Gf2, IntMatrix, Matrix, Poly, Ring};
pub use error::{Error, Result};
