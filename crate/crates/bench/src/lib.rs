//! Fixtures shared by the benchmarks.

use afflap_core::{enumerate_block, laplacian_by_definition, BlockBasis, IntMatrix};

/// Largest `(q, w)` sub-block of `C^{(h)}(L_k)`.
pub fn largest_subblock(k: i64, h: i64) -> BlockBasis {
    enumerate_block(k, h, None)
        .expect("valid block")
        .split()
        .into_values()
        .max_by_key(BlockBasis::len)
        .expect("non-empty block")
}

/// The Laplacian on [`largest_subblock`].
pub fn laplacian_fixture(k: i64, h: i64) -> IntMatrix {
    laplacian_by_definition(k, &largest_subblock(k, h)).expect("laplacian")
}
