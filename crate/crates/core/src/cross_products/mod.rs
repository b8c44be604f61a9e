//! Module/comodule compatibilities, matched pairs with their double cross products,
//! and mutual pairs with their bicrossproducts.

pub mod matched;
pub mod mutual;
pub mod symmetries;

pub use matched::{
    build_double_cross_product, check_matched_pair_hopf, double_cross_product_unchecked, pair_index, MatchedPairHopf,
};
pub use mutual::{bicrossproduct_unchecked, build_bicrossproduct, check_mutual_pair, MutualPairHopf};
pub use symmetries::{check_comodule_algebra, check_comodule_coalgebra, check_module_algebra, check_module_coalgebra};

use crate::foundation::{LinComb, LinearOperator};

pub(crate) fn e(i: usize) -> LinComb<usize> {
    LinComb::basis(i)
}

/// Powers of structure twists; every twist of a Hom-Hopf algebra here is invertible.
pub(crate) fn pw(op: &LinearOperator, k: i64) -> LinearOperator {
    op.power(k).expect("structure twists are invertible")
}
