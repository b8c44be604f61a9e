//! Finite-dimensional duality: convolution algebras, duals of (co)algebras and
//! Hom-Hopf algebras, coregular actions, and the degreewise dual of a truncation.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::foundation::{LinComb, LinearOperator, Scalar};
use crate::hom_core::{ActionData, Filtration, HomAlgebraData, HomCoalgebraData, HomHopfData, Side};

/// A bilinear evaluation between two finite bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub left_dim: usize,
    pub right_dim: usize,
    pub eval: Vec<Vec<Scalar>>,
}

impl Pairing {
    /// Dual-basis pairing `⟨f_i, e_j⟩ = δ_ij`.
    pub fn canonical(dim: usize) -> Self {
        let eval = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        Pairing { left_dim: dim, right_dim: dim, eval }
    }

    pub fn pair(&self, f: &LinComb<usize>, x: &LinComb<usize>) -> Scalar {
        let mut out = Scalar::zero();
        for (i, a) in f.iter() {
            for (j, b) in x.iter() {
                out += a * b * &self.eval[*i][*j];
            }
        }
        out
    }

    pub fn is_nondegenerate(&self) -> bool {
        if self.left_dim != self.right_dim {
            return false;
        }
        let rows = self.eval.clone();
        LinearOperator::from_matrix(&rows).map(|m| m.invert().is_ok()).unwrap_or(false)
    }
}

/// Maps `C → A` with product `(f⋆g)(c) = f(β⁻²c₁)•g(β⁻²c₂)`, twist `f ↦ α∘f∘β⁻¹`
/// and unit `η∘ε`. The basis map sending `e_i` to `a_k` has index `i * dim(A) + k`.
pub fn convolution_algebra(c: &HomCoalgebraData, a: &HomAlgebraData) -> Result<HomAlgebraData> {
    let (nc, na) = (c.dim, a.dim);
    let idx = |i: usize, k: usize| i * na + k;
    let bm2 = c.beta_pow(-2);
    let bm1 = c.beta_pow(-1);
    let split: Vec<_> = (0..nc).map(|x| bm2.apply_pair(&bm2, &c.comult[x])).collect();
    let dim = nc * na;
    let mut mult = vec![Some(LinComb::zero()); dim * dim];
    for x in 0..nc {
        for ((p, q), coef) in split[x].iter() {
            for k in 0..na {
                for l in 0..na {
                    let slot = &mut mult[idx(*p, k) * dim + idx(*q, l)];
                    match (slot.as_mut(), a.mul(k, l)) {
                        (Some(acc), Some(prod)) => {
                            for (m, v) in prod.iter() {
                                acc.add_term(idx(x, *m), coef * v);
                            }
                        }
                        _ => *slot = None,
                    }
                }
            }
        }
    }
    let mut images = vec![LinComb::zero(); dim];
    for i in 0..nc {
        for k in 0..na {
            for x in 0..nc {
                let b = bm1.image(x).coeff(&i);
                if b.is_zero() {
                    continue;
                }
                for (m, v) in a.alpha.image(k).iter() {
                    images[idx(i, k)].add_term(idx(x, *m), &b * v);
                }
            }
        }
    }
    let mut unit = LinComb::zero();
    for x in 0..nc {
        for (m, v) in a.unit.iter() {
            unit.add_term(idx(x, *m), &c.counit[x] * v);
        }
    }
    let alpha = LinearOperator::new(dim, images)?;
    HomAlgebraData::new(dim, mult, unit, alpha)
}

/// The algebraic dual `C*` with `(f⋆g)(c) = f(β⁻²c₁)g(β⁻²c₂)`, twist `(β⁻¹)*` and unit `ε`.
pub fn dual_algebra_of_coalgebra(c: &HomCoalgebraData) -> Result<HomAlgebraData> {
    let n = c.dim;
    let bm2 = c.beta_pow(-2);
    let mut mult = vec![LinComb::zero(); n * n];
    for x in 0..n {
        for ((p, q), coef) in bm2.apply_pair(&bm2, &c.comult[x]).iter() {
            mult[p * n + q].add_term(x, coef.clone());
        }
    }
    let unit = LinComb::from_terms(c.counit.iter().cloned().enumerate());
    let alpha = c.beta_pow(-1).transpose();
    let mut out = HomAlgebraData::total(n, mult, unit, alpha)?;
    out.filtration = c.filtration.clone();
    Ok(out)
}

/// The dual Hom-coalgebra of a finite Hom-algebra: `Δ(f)(a⊗a') = f(α⁻²(a•a'))`,
/// counit `f ↦ f(η)`, twist `(α⁻¹)*`.
///
/// Products missing from a truncated table contribute nothing; on a filtered input
/// they only concern components beyond the truncation degree.
pub fn dual_coalgebra_of_algebra(a: &HomAlgebraData) -> Result<HomCoalgebraData> {
    let n = a.dim;
    let am2 = a.alpha_pow(-2);
    let mut comult = vec![LinComb::zero(); n];
    for i in 0..n {
        for j in 0..n {
            if let Some(prod) = a.mul(i, j) {
                for (k, v) in am2.apply(prod).iter() {
                    comult[*k].add_term((i, j), v.clone());
                }
            }
        }
    }
    let counit = (0..n).map(|k| a.unit.coeff(&k)).collect();
    let beta = a.alpha_pow(-1).transpose();
    let mut out = HomCoalgebraData::new(n, comult, counit, beta)?;
    if let Some(f) = &a.filtration {
        out.filtration = Some(f.clone());
        let trimmed = out.comult.iter().map(|d| out.trunc(d.clone(), 2)).collect();
        out.comult = trimmed;
    }
    Ok(out)
}

/// The dual Hom-Hopf algebra on the dual basis, with antipode `f ↦ f∘S`.
pub fn dual_hom_hopf(h: &HomHopfData) -> Result<HomHopfData> {
    let alg = dual_algebra_of_coalgebra(&h.coalg)?;
    let coalg = dual_coalgebra_of_algebra(&h.alg)?;
    let mut out = HomHopfData::new(alg, coalg, h.antipode.transpose())?;
    out.degrees = h.degrees.clone();
    out.labels = h.labels.as_ref().map(|l| l.iter().map(|s| format!("{s}*")).collect());
    Ok(out)
}

/// Left and right coregular actions of `A` on `A*`:
/// `ρ_L(a⊗f)(a') = f(α⁻²(a'•a))` and `ρ_R(f⊗a)(a') = f(α⁻²(a•a'))`, both with carrier map `(α⁻¹)*`.
pub fn coregular_actions(a: &HomAlgebraData) -> Result<(ActionData, ActionData)> {
    let n = a.dim;
    let am2 = a.alpha_pow(-2);
    let gamma = a.alpha_pow(-1).transpose();
    let dualize = |x: usize, k: usize, left: bool| -> LinComb<usize> {
        let mut out = LinComb::zero();
        for y in 0..n {
            let prod = if left { a.mul(y, x) } else { a.mul(x, y) };
            if let Some(p) = prod {
                let c = am2.apply(p).coeff(&k);
                out.add_term(y, c);
            }
        }
        out
    };
    let left = ActionData::from_fn(Side::Left, n, n, gamma.clone(), |x, k| dualize(x, k, true))?;
    let right = ActionData::from_fn(Side::Right, n, n, gamma, |x, k| dualize(x, k, false))?;
    Ok((left, right))
}

/// Degreewise dual of a truncated structure: the dual Hom-Hopf algebra on the dual
/// basis of the normal forms, where tensor components past the truncation degree are
/// ignored in every comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDual {
    pub hopf: HomHopfData,
    pub dims: Vec<usize>,
    pub pairings: Vec<Pairing>,
}

fn check_filtered(h: &HomHopfData, deg: &[usize]) -> Result<()> {
    let n = h.dim();
    let raises = |src: usize, v: &LinComb<usize>| v.keys().any(|k| deg[*k] > deg[src]);
    for (name, op) in [("alpha", h.alpha()), ("beta", h.beta()), ("antipode", &h.antipode)] {
        if let Some(i) = (0..n).find(|i| raises(*i, op.image(*i))) {
            return Err(Error::NotFiltered(format!("{name} on basis {i}")));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if let Some(p) = h.alg.mul(i, j) {
                if p.keys().any(|k| deg[*k] > deg[i] + deg[j]) {
                    return Err(Error::NotFiltered(format!("product of {i} and {j}")));
                }
            }
        }
        if h.coalg.comult[i].keys().any(|(p, q)| deg[*p] + deg[*q] > deg[i]) {
            return Err(Error::NotFiltered(format!("coproduct of {i}")));
        }
    }
    Ok(())
}

pub fn graded_dual(u: &HomHopfData) -> Result<GradedDual> {
    let deg = u.degrees.clone().ok_or_else(|| Error::Precondition("degrees required".into()))?;
    check_filtered(u, &deg)?;
    let bound = deg.iter().copied().max().unwrap_or(0);
    let filt = Filtration { degree: deg.clone(), bound };
    let mut src = u.clone();
    src.alg.filtration = Some(filt.clone());
    src.coalg.filtration = Some(filt.clone());
    let hopf = dual_hom_hopf(&src)?.with_filtration(filt);
    let dims = u.degree_dims().unwrap_or_default();
    let pairings = dims.iter().map(|d| Pairing::canonical(*d)).collect();
    Ok(GradedDual { hopf, dims, pairings })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_pairing_is_identity() {
        let p = Pairing::canonical(3);
        assert!(p.is_nondegenerate());
        assert_eq!(p.pair(&LinComb::basis(1), &LinComb::basis(1)), Scalar::one());
        assert!(p.pair(&LinComb::basis(1), &LinComb::basis(2)).is_zero());
    }
}
