//! Weighted planar binary trees and the truncated enveloping Hom-Hopf algebra of a Hom-Lie algebra.

pub mod actions;
pub mod ideal;
pub mod tree;
pub mod truncated;

pub use actions::*;
pub use ideal::{commutator_relation, folded_relations, ideal_i_span, ideal_j_ranks, reassociator, weight_relation, weighted_relations, IdealClosure};
pub use tree::{coassociator, shapes, trees_of_degree, Shift, Tree, TreeCtx};
pub use truncated::{build_truncated_uea, check_relations_hopf_ideal, decorated_ctx, weighted_quotient_dims, TruncatedUEA};
