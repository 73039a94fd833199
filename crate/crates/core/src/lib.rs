//! Exact homological algebra for the subalgebras `L_k` of the affine Lie
//! algebra ŝl₂.
//!
//! `L_k` is spanned by the generators `e_a`, `a ≥ k`, with bracket
//! `[e_a, e_b] = ε_{b−a} e_{a+b}`. The crate builds the graded pieces of the
//! standard complex `C_*(L_k)`, its differential and codifferential, the
//! Laplacian `Γ_k = dδ_k + δ_k d` (both by definition and by its closed form
//! in terms of the `sl₂` action), exact spectra and harmonic chains, the
//! finite-dimensional `sl₂` machinery needed for singular characters, and a
//! registry of q-series identities checked coefficient by coefficient.
//!
//! Everything is exact: chain coefficients are arbitrary-precision rationals,
//! operator matrices are integer and all eliminations are fraction-free.

pub mod algebra;
pub mod chain;
mod error;
pub mod identities;
pub mod laplacian;
pub mod linalg;
pub mod series;
pub mod sl2;

pub use algebra::{bracket, epsilon, generator_degree, generator_weight};
pub use chain::{
    enumerate_block, normalize_wedge, BlockBasis, Chain, GradedCounts, Monomial, Operator,
    Sl2Generator,
};
pub use error::{Error, Result};
pub use identities::{verify_identity, IdentityId, IdentityPart, IdentityReport};
pub use laplacian::{
    characteristic_polynomial, harmonic_basis, homology_table, laplacian_by_definition,
    laplacian_closed_form, one_dim_eigenvalue, predicted_lambda, spectrum, two_dim_pairing_oracle,
    HomologyTable, SpectralBlock, Spectrum,
};
pub use linalg::{IntMatrix, IntPoly};
pub use series::{HalfLaurent, Ring, TruncatedSeries};
pub use sl2::{RepRingElement, WeightModuleView};
