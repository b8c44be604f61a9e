//! Exact scalars, sparse linear combinations, linear operators and subspaces.

pub mod lincomb;
pub mod operator;
pub mod solve;
pub mod subspace;

pub use lincomb::{
    bilinear, frac, int, lincomb_arith, parse_scalar, scalar_to_string, tensor, try_bilinear, IndexTuple, LinComb,
    Scalar,
};
pub use operator::{tensor_operator, LinearOperator};
pub use solve::{solve_linear, LinearSolution};
pub use subspace::{quotient_projection, subspace_basis, Subspace};
