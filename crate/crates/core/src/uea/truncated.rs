use std::collections::BTreeMap;

use num_traits::Zero;

use super::ideal::{folded_relations, weighted_relations};
use super::tree::{trees_of_degree, Shift, Tree, TreeCtx};
use crate::error::{Error, Result};
use crate::foundation::{LinComb, LinearOperator, Scalar, Subspace};
use crate::hom_core::{Filtration, HomAlgebraData, HomCoalgebraData, HomHopfData};
use crate::hom_lie::{check_hom_lie, HomLieData};
use crate::report::CheckReport;

/// The enveloping Hom-Hopf algebra of `g` up to degree `n`, on a basis of weight-zero
/// normal-form trees. Products of total degree past `n` are undefined.
#[derive(Clone, Debug)]
pub struct TruncatedUEA {
    pub g: HomLieData,
    pub n: usize,
    pub ctx: TreeCtx,
    pub relations: Subspace<Tree>,
    pub basis: Vec<Tree>,
    pub index: BTreeMap<Tree, usize>,
    pub hopf: HomHopfData,
}

impl TruncatedUEA {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree_of(&self, i: usize) -> usize {
        self.basis[i].degree()
    }

    /// Number of normal forms in each degree `0..=n`.
    pub fn dims(&self) -> Vec<usize> {
        let mut out = vec![0; self.n + 1];
        for t in &self.basis {
            out[t.degree()] += 1;
        }
        out
    }

    /// Coordinates of a tree combination (any weights, degree `≤ n`) in the normal-form basis.
    pub fn project(&self, x: &LinComb<Tree>) -> Result<LinComb<usize>> {
        let r = self.relations.reduce(&self.ctx.fold(x));
        let mut out = LinComb::zero();
        for (t, c) in r.iter() {
            match self.index.get(t) {
                Some(i) => out.add_term(*i, c.clone()),
                None => return Err(Error::TruncationOverflow { degree: t.degree(), bound: self.n }),
            }
        }
        Ok(out)
    }

    /// The normal-form trees behind a coordinate vector.
    pub fn lift(&self, x: &LinComb<usize>) -> LinComb<Tree> {
        LinComb::from_terms(x.iter().map(|(i, c)| (self.basis[*i].clone(), c.clone())))
    }

    pub fn project_pair(&self, x: &LinComb<(Tree, Tree)>) -> Result<LinComb<(usize, usize)>> {
        let mut out = LinComb::zero();
        for ((a, b), c) in x.iter() {
            let pa = self.project(&LinComb::basis(a.clone()))?;
            let pb = self.project(&LinComb::basis(b.clone()))?;
            out.add_scaled(&crate::foundation::tensor(&pa, &pb), c);
        }
        Ok(out)
    }

    /// Product of two basis elements; errors past the truncation degree.
    pub fn multiply(&self, i: usize, j: usize) -> Result<LinComb<usize>> {
        self.hopf.alg.mul(i, j).cloned().ok_or(Error::TruncationOverflow {
            degree: self.degree_of(i) + self.degree_of(j),
            bound: self.n,
        })
    }

    pub fn label(&self, i: usize, names: &dyn Fn(usize) -> String) -> String {
        self.basis[i].render(names)
    }
}

/// Builds the truncated enveloping algebra from the folded relations.
pub fn build_truncated_uea(g: &HomLieData, n: usize) -> Result<TruncatedUEA> {
    if !check_hom_lie(g).passed() {
        return Err(Error::NotHomLie);
    }
    let closure = folded_relations(g, n);
    let ctx = closure.ctx.clone();
    let relations = closure.span;
    let mut basis = vec![Tree::unit()];
    for d in 1..=n {
        let mut here: Vec<Tree> = trees_of_degree(d, g.dim, 0).into_iter().filter(|t| !relations.is_pivot(t)).collect();
        here.sort_by(|a, b| b.cmp(a));
        basis.extend(here);
    }
    let index: BTreeMap<Tree, usize> = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let dim = basis.len();
    let degrees: Vec<usize> = basis.iter().map(Tree::degree).collect();

    let draft = TruncatedUEA {
        g: g.clone(),
        n,
        ctx: ctx.clone(),
        relations,
        basis,
        index,
        hopf: crate::fixtures::trivial_hopf(),
    };
    let b = |i: usize| LinComb::basis(draft.basis[i].clone());

    let mut mult = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            if degrees[i] + degrees[j] > n {
                mult.push(None);
            } else {
                mult.push(Some(draft.project(&ctx.graft(&b(i), &b(j)))?));
            }
        }
    }
    let alpha_images = (0..dim).map(|i| draft.project(&ctx.a_shift(&b(i), 1))).collect::<Result<Vec<_>>>()?;
    let alpha = LinearOperator::new(dim, alpha_images)?;
    let alg = HomAlgebraData::new(dim, mult, LinComb::basis(0), alpha)?;

    let comult = (0..dim).map(|i| draft.project_pair(&ctx.coproduct(&b(i)))).collect::<Result<Vec<_>>>()?;
    let counit = (0..dim).map(|i| if i == 0 { Scalar::from_integer(1.into()) } else { Scalar::zero() }).collect();
    let coalg = HomCoalgebraData::new(dim, comult, counit, LinearOperator::identity(dim))?;

    let s_images = (0..dim).map(|i| draft.project(&ctx.antipode(&b(i)))).collect::<Result<Vec<_>>>()?;
    let antipode = LinearOperator::new(dim, s_images)?;

    let filt = Filtration { degree: degrees.clone(), bound: n };
    let mut hopf = HomHopfData::new(alg, coalg, antipode)?.with_filtration(filt);
    hopf.degrees = Some(degrees);
    hopf.labels = Some(draft.basis.iter().map(|t| t.to_string()).collect());
    Ok(TruncatedUEA { hopf, ..draft })
}

/// Membership checks for the relation space of `u`: it is a coideal
/// (`(π⊗π)Δ(v) = 0`), killed by `ε`, and stable under the antipode, for every
/// spanning row `v`. Items: `relations-coideal`, `relations-counit`, `relations-antipode`.
pub fn check_relations_hopf_ideal(u: &TruncatedUEA) -> CheckReport {
    let mut r = CheckReport::new();
    for id in ["relations-coideal", "relations-counit", "relations-antipode"] {
        r.declare(id);
    }
    let red = |x: &LinComb<Tree>| u.relations.reduce(&u.ctx.fold(x));
    for (k, v) in u.relations.rows().enumerate() {
        let mut d = LinComb::<(Tree, Tree)>::zero();
        for ((a, b), c) in u.ctx.coproduct(v).iter() {
            let ra = red(&LinComb::basis(a.clone()));
            let rb = red(&LinComb::basis(b.clone()));
            d.add_scaled(&crate::foundation::tensor(&ra, &rb), c);
        }
        r.assert_true("relations-coideal", &[k], d.is_zero());
        r.assert_true("relations-counit", &[k], u.ctx.counit(v).is_zero());
        r.assert_true("relations-antipode", &[k], red(&u.ctx.antipode(v)).is_zero());
    }
    r
}

/// Quotient dimensions of the weighted model with leaf weights `≤ w`, and whether every
/// weighted tree within budget is identified with a combination of weight-zero trees.
pub fn weighted_quotient_dims(g: &HomLieData, n: usize, w: u32) -> (Vec<usize>, bool) {
    let cl = weighted_relations(g, n, w);
    let mut dims = vec![1usize; n + 1];
    let mut folded = true;
    for d in 1..=n {
        let free: Vec<Tree> = trees_of_degree(d, g.dim, w).into_iter().filter(|t| !cl.span.is_pivot(t)).collect();
        folded &= free.iter().all(|t| t.max_weight() == 0);
        dims[d] = free.len();
    }
    (dims, folded)
}

/// The context for tree operations with decorations in `g`.
pub fn decorated_ctx(g: &HomLieData) -> TreeCtx {
    TreeCtx::new(&g.phi, Shift::Decorations)
}
