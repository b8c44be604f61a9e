use super::data::{HomAlgebraData, HomCoalgebraData, HomHopfData};
use crate::error::{Error, Result};
use crate::foundation::{solve_linear, LinComb, LinearOperator};

fn e(i: usize) -> LinComb<usize> {
    LinComb::basis(i)
}

fn is_associative(a: &HomAlgebraData) -> bool {
    let n = a.dim;
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let l = a.mul(y, z).and_then(|yz| a.mul_lc(&e(x), yz));
                let r = a.mul(x, y).and_then(|xy| a.mul_lc(xy, &e(z)));
                l == r
            })
        })
    })
}

fn is_algebra_map(a: &HomAlgebraData, t: &LinearOperator) -> bool {
    let n = a.dim;
    t.apply(&a.unit) == a.unit
        && (0..n).all(|x| (0..n).all(|y| a.mul(x, y).map(|m| t.apply(m)) == a.mul_lc(t.image(x), t.image(y))))
}

fn is_coalgebra_map(c: &HomCoalgebraData, t: &LinearOperator) -> bool {
    (0..c.dim).all(|x| c.comult_lc(t.image(x)) == t.apply_pair(t, &c.comult[x]) && c.counit_lc(t.image(x)) == c.counit[x])
}

fn is_coassociative(c: &HomCoalgebraData) -> bool {
    let id = LinearOperator::identity(c.dim);
    let plain = HomCoalgebraData { beta: id, ..c.clone() };
    super::checks::check_hom_coalgebra(&plain).item_passed("hom-coassoc")
}

/// `(A, t∘μ, t)` from an associative algebra and an algebra endomorphism `t`.
pub fn twist_algebra(assoc: &HomAlgebraData, t: &LinearOperator) -> Result<HomAlgebraData> {
    if !is_associative(assoc) {
        return Err(Error::NotAssociative);
    }
    if !is_algebra_map(assoc, t) {
        return Err(Error::NotEndomorphism);
    }
    let mult = assoc.mult.iter().map(|m| m.as_ref().map(|m| t.apply(m))).collect();
    HomAlgebraData::new(assoc.dim, mult, assoc.unit.clone(), t.clone())
}

/// `(C, Δ∘t, t)` from a coassociative coalgebra and a coalgebra endomorphism `t`.
pub fn cotwist_coalgebra(coassoc: &HomCoalgebraData, t: &LinearOperator) -> Result<HomCoalgebraData> {
    if !is_coassociative(coassoc) {
        return Err(Error::Precondition("coalgebra is not coassociative".into()));
    }
    if !is_coalgebra_map(coassoc, t) {
        return Err(Error::NotBialgebraMorphism);
    }
    let comult = (0..coassoc.dim).map(|i| coassoc.comult_lc(t.image(i))).collect();
    HomCoalgebraData::new(coassoc.dim, comult, coassoc.counit.clone(), t.clone())
}

/// `(H, a∘μ, η, a, Δ∘b, ε, b, S)` from a Hopf algebra and two commuting bialgebra endomorphisms.
pub fn hopf_twist(h: &HomHopfData, a: &LinearOperator, b: &LinearOperator) -> Result<HomHopfData> {
    if !h.alpha().is_identity() || !h.beta().is_identity() {
        return Err(Error::Precondition("input twists must be identities".into()));
    }
    if !a.commutes_with(b) {
        return Err(Error::NotCommutingPair);
    }
    for t in [a, b] {
        if !is_algebra_map(&h.alg, t) || !is_coalgebra_map(&h.coalg, t) {
            return Err(Error::NotBialgebraMorphism);
        }
    }
    let mult = h.alg.mult.iter().map(|m| m.as_ref().map(|m| a.apply(m))).collect();
    let alg = HomAlgebraData::new(h.dim(), mult, h.alg.unit.clone(), a.clone())?;
    let comult = (0..h.dim()).map(|i| h.coalg.comult_lc(b.image(i))).collect();
    let coalg = HomCoalgebraData::new(h.dim(), comult, h.coalg.counit.clone(), b.clone())?;
    let mut out = HomHopfData::new(alg, coalg, h.antipode.clone())?;
    out.degrees = h.degrees.clone();
    out.labels = h.labels.clone();
    Ok(out)
}

/// Opposite-multiplication and opposite-comultiplication variants, both with antipode `S⁻¹`.
pub fn op_cop_variants(h: &HomHopfData) -> Result<(HomHopfData, HomHopfData)> {
    let s_inv = h.antipode.invert().map_err(|_| Error::AntipodeNotInvertible)?;
    let n = h.dim();
    let mut op = h.clone();
    op.alg.mult = (0..n * n).map(|k| h.alg.mult[(k % n) * n + k / n].clone()).collect();
    op.antipode = s_inv.clone();
    let mut cop = h.clone();
    cop.coalg.comult = h
        .coalg
        .comult
        .iter()
        .map(|d| LinComb::from_terms(d.iter().map(|((p, q), c)| ((*q, *p), c.clone()))))
        .collect();
    cop.antipode = s_inv;
    Ok((op, cop))
}

/// Smallest `n ≤ n_max` and `y` with `αⁿ(x•y) = αⁿ(y•x) = η`.
pub fn hom_inverse(a: &HomAlgebraData, x: &LinComb<usize>, n_max: usize) -> Option<(LinComb<usize>, usize)> {
    let dim = a.dim;
    for n in 0..=n_max {
        let an = a.alpha_pow(n as i64);
        let mut left = vec![LinComb::zero(); dim];
        let mut right = vec![LinComb::zero(); dim];
        let mut defined = true;
        for j in 0..dim {
            match (a.mul_lc(x, &e(j)), a.mul_lc(&e(j), x)) {
                (Some(l), Some(r)) => {
                    for (m, c) in an.apply(&l).iter() {
                        left[*m].add_term(j, c.clone());
                    }
                    for (m, c) in an.apply(&r).iter() {
                        right[*m].add_term(j, c.clone());
                    }
                }
                _ => defined = false,
            }
        }
        if !defined {
            continue;
        }
        let eqs: Vec<_> = (0..dim)
            .flat_map(|m| {
                let u = a.unit.coeff(&m);
                [(left[m].clone(), u.clone()), (right[m].clone(), u)]
            })
            .collect();
        if let Some(sol) = solve_linear(&eqs, dim) {
            let y = LinComb::from_terms(sol.values.into_iter().enumerate());
            return Some((y, n));
        }
    }
    None
}

/// Default search bound for [`hom_inverse`].
pub const HOM_INVERSE_BOUND: usize = 8;
