use num_traits::Zero;

use super::lincomb::{LinComb, Scalar};
use super::subspace::Subspace;

/// Solution of an exact linear system: a particular solution (free variables set
/// to zero) and the dimension of the solution space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub values: Vec<Scalar>,
    pub nullity: usize,
}

/// Solves `Σ a_j x_j = b` for each `(a, b)`, over variables `0..nvars`.
/// Returns `None` when the system is inconsistent.
pub fn solve_linear(equations: &[(LinComb<usize>, Scalar)], nvars: usize) -> Option<LinearSolution> {
    let rhs = nvars;
    let mut s = Subspace::new();
    for (a, b) in equations {
        if let Some(k) = a.keys().find(|k| **k >= nvars) {
            panic!("variable {k} outside 0..{nvars}");
        }
        let mut row = a.clone();
        row.add_term(rhs, -b.clone());
        s.insert(&row);
    }
    if s.is_pivot(&rhs) {
        return None;
    }
    let mut values = vec![Scalar::zero(); nvars];
    for p in s.pivots() {
        values[*p] = -s.row(p).unwrap().coeff(&rhs);
    }
    Some(LinearSolution { values, nullity: nvars - s.rank() })
}
