//! Structure records for Hom-(co)algebras and Hom-Hopf algebras, twisting
//! constructions, and exhaustive axiom checkers.

pub mod checks;
pub mod data;
pub mod modules;
pub mod twists;

pub use checks::{
    antipode_by_convolution, check_hom_algebra, check_hom_bialgebra, check_hom_coalgebra, check_hom_hopf,
    check_hopf_suite,
};
pub use data::{truncate, Filtration, HomAlgebraData, HomCoalgebraData, HomHopfData};
pub use modules::{check_hom_comodule, check_hom_module, ActionData, CoactionData, Side};
pub use twists::{cotwist_coalgebra, hom_inverse, hopf_twist, op_cop_variants, twist_algebra, HOM_INVERSE_BOUND};
