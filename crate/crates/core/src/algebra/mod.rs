//! Exact scalars, matrices, and the standard matrices built from them.

mod commutant;
mod interchange;
mod linalg;
mod matrix;
mod poly;
mod ring;
pub mod standard;

pub use commutant::{
    check_scalar_block, commutant_basis, intertwiner_basis, CommutantBasis, RatMatrix,
};
pub use interchange::{AnyMatrix, Entry, MatrixDocument};
pub use linalg::{nullspace, rank, rref};
pub use matrix::Matrix;
pub use poly::{split_rational_roots, Monomial, Poly, Var};
pub use ring::{Domain, Gf2, Ring};
pub use standard::{build_standard, IntMatrix, StandardKind};
