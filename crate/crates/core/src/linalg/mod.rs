//! Exact integer linear algebra: sparse matrices, fraction-free elimination,
//! characteristic polynomials and factorisation over ℤ.

mod elimination;
mod matrix;
mod poly;

pub use elimination::{kernel_basis, nullity, rank, rref};
pub(crate) use elimination::primitive_integer_vector;
pub use matrix::IntMatrix;
pub use poly::{charpoly, factor_over_integers, Factor, IntPoly};
