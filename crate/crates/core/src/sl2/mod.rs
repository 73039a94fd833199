//! Finite-dimensional `sl₂` representation theory: the representation ring,
//! Weyl characters, Clebsch–Gordan singular vectors and singular vectors on
//! chain blocks.

mod clebsch_gordan;
mod module;
mod rep_ring;

pub use clebsch_gordan::{
    cg_singular_vector, cg_tensor, tensor_raise, tensor_singular_dim, Irrep, TensorVector,
};
pub use module::{singular_block_dims, WeightModuleView};
pub use rep_ring::{motzkin_sums, tensor_power_q, weyl_inverse, weyl_map, RepRingElement};
