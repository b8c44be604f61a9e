//! Exact construction and verification of Hom-Hopf algebras of (α,β)-type.
//!
//! Structure maps are stored as sparse tables over ℚ and every axiom is checked
//! exhaustively over basis tuples. Enveloping algebras of Hom-Lie algebras are
//! built from weighted planar binary trees up to a truncation degree.

pub mod cross_products;
pub mod duality;
pub mod error;
pub mod fixtures;
pub mod foundation;
pub mod hom_core;
pub mod hom_lie;
pub mod report;
pub mod semidual;
pub mod uea;

pub use error::{Error, Result};
pub use report::CheckReport;
