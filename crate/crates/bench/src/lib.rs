//! Shared fixture builders for the benchmarks.

use moufang_core::{fixtures, CayleyTable};

/// A Moufang loop of order `2 * half_order`: the Chein double of a cyclic
/// group. Abelian input keeps it a group, which is fine for timing the
/// checkers; the structure of the scan does not depend on the verdict.
pub fn doubled_cyclic(half_order: usize) -> CayleyTable {
    fixtures::chein_double(&fixtures::cyclic_group(half_order).expect("positive order"))
        .expect("cyclic groups are groups")
}

/// The order-12 Chein double of S3, the smallest nonassociative Moufang
/// loop.
pub fn smallest_proper_moufang() -> CayleyTable {
    fixtures::chein_double(&fixtures::symmetric_group_3()).expect("S3 is a group")
}
