//! Relation subspaces: the reassociation ideal and the enveloping-algebra relations,
//! computed by closure under grafting and the twist up to a degree bound.

use std::collections::VecDeque;

use num_traits::One;

use super::tree::{max_degree, trees_of_degree, Shift, Tree, TreeCtx};
use crate::foundation::{LinComb, Scalar, Subspace};
use crate::hom_lie::HomLieData;

/// `(a∨b)∨𝔞(c) − 𝔞(a)∨(b∨c)`.
pub fn reassociator(ctx: &TreeCtx, a: &LinComb<Tree>, b: &LinComb<Tree>, c: &LinComb<Tree>) -> LinComb<Tree> {
    let lhs = ctx.graft(&ctx.graft(a, b), &ctx.a_shift(c, 1));
    let rhs = ctx.graft(&ctx.a_shift(a, 1), &ctx.graft(b, c));
    lhs.minus(&rhs)
}

/// `(φ₁, s, ξ) − (φ₁, 0, φˢ(ξ))`.
pub fn weight_relation(g: &HomLieData, s: u32, xi: usize) -> LinComb<Tree> {
    let folded = g.phi_pow(s as i64).image(xi).clone();
    let mut out = LinComb::basis(Tree::leaf(s, xi));
    for (k, c) in folded.iter() {
        out.add_term(Tree::leaf(0, *k), -c.clone());
    }
    out
}

/// `(φ₂,0,0,ξ₁,ξ₂) − (φ₂,0,0,ξ₂,ξ₁) − (φ₁,0,[ξ₁,ξ₂])`.
pub fn commutator_relation(g: &HomLieData, a: usize, b: usize) -> LinComb<Tree> {
    let (la, lb) = (Tree::leaf(0, a), Tree::leaf(0, b));
    let mut out = LinComb::basis(Tree::join(&la, &lb));
    out.add_term(Tree::join(&lb, &la), -Scalar::one());
    for (k, c) in g.br(a, b).iter() {
        out.add_term(Tree::leaf(0, *k), -c.clone());
    }
    out
}

/// A subspace of trees of degree `≤ max_degree` closed under grafting with the
/// configured basis trees on either side and under `𝔞`.
pub struct IdealClosure {
    pub ctx: TreeCtx,
    pub max_degree: usize,
    pub max_weight: u32,
    pub span: Subspace<Tree>,
    /// Graft partners by degree, index 0 unused.
    partners: Vec<Vec<Tree>>,
    queue: VecDeque<LinComb<Tree>>,
}

impl IdealClosure {
    pub fn new(ctx: TreeCtx, dim: usize, max_degree: usize, max_weight: u32) -> Self {
        let partner_weight = if ctx.shift == Shift::Weights { max_weight } else { 0 };
        let partners = (0..=max_degree)
            .map(|n| if n == 0 { Vec::new() } else { trees_of_degree(n, dim, partner_weight) })
            .collect();
        IdealClosure { ctx, max_degree, max_weight, span: Subspace::new(), partners, queue: VecDeque::new() }
    }

    fn within_budget(&self, v: &LinComb<Tree>) -> bool {
        max_degree(v) <= self.max_degree && v.keys().all(|t| t.max_weight() <= self.max_weight)
    }

    /// Adds `v` if it is within budget; returns whether the span grew.
    pub fn push(&mut self, v: LinComb<Tree>) -> bool {
        if v.is_zero() || !self.within_budget(&v) {
            return false;
        }
        if self.span.insert(&v) {
            self.queue.push_back(v);
            true
        } else {
            false
        }
    }

    /// Runs the worklist to a fixed point.
    pub fn close(&mut self) {
        while let Some(v) = self.queue.pop_front() {
            let d = max_degree(&v);
            let shifted = self.ctx.a_shift(&v, 1);
            self.push(shifted);
            for n in 1..=self.max_degree.saturating_sub(d) {
                let partners = std::mem::take(&mut self.partners[n]);
                for t in &partners {
                    let tl = LinComb::basis(t.clone());
                    let left = self.ctx.graft(&v, &tl);
                    let right = self.ctx.graft(&tl, &v);
                    self.push(left);
                    self.push(right);
                }
                self.partners[n] = partners;
            }
        }
    }

    /// Rank of the span in each degree `0..=max_degree`, counted by pivot degree.
    pub fn ranks(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_degree + 1];
        for p in self.span.pivots() {
            out[p.degree()] += 1;
        }
        out
    }
}

/// Reassociation relations on all triples of trees (unit included) with weights `≤ max_weight`,
/// closed under grafting and the weight shift.
pub fn ideal_i_span(dim: usize, phi: &crate::foundation::LinearOperator, n_max: usize, max_weight: u32) -> IdealClosure {
    let ctx = TreeCtx::new(phi, Shift::Weights);
    let mut cl = IdealClosure::new(ctx, dim, n_max, max_weight);
    seed_reassociators(&mut cl, dim, max_weight);
    cl.close();
    cl
}

fn seed_reassociators(cl: &mut IdealClosure, dim: usize, max_weight: u32) {
    let n = cl.max_degree;
    let weight = if cl.ctx.shift == Shift::Weights { max_weight } else { 0 };
    let by_degree: Vec<Vec<Tree>> =
        (0..=n).map(|d| if d == 0 { vec![Tree::unit()] } else { trees_of_degree(d, dim, weight) }).collect();
    for da in 0..=n {
        for db in 0..=n - da {
            for dc in 0..=n - da - db {
                for a in &by_degree[da] {
                    for b in &by_degree[db] {
                        for c in &by_degree[dc] {
                            let v = reassociator(
                                &cl.ctx,
                                &LinComb::basis(a.clone()),
                                &LinComb::basis(b.clone()),
                                &LinComb::basis(c.clone()),
                            );
                            cl.push(v);
                        }
                    }
                }
            }
        }
    }
}

/// All relations of the weighted model: reassociators plus both families of enveloping
/// relations, closed under grafting and the weight shift, within the weight budget.
pub fn weighted_relations(g: &HomLieData, n_max: usize, max_weight: u32) -> IdealClosure {
    let ctx = TreeCtx::new(&g.phi, Shift::Weights);
    let mut cl = IdealClosure::new(ctx, g.dim, n_max, max_weight);
    seed_reassociators(&mut cl, g.dim, max_weight);
    seed_enveloping(&mut cl, g, max_weight);
    cl.close();
    cl
}

fn seed_enveloping(cl: &mut IdealClosure, g: &HomLieData, max_weight: u32) {
    if cl.max_degree == 0 {
        return;
    }
    for xi in 0..g.dim {
        for s in 1..=max_weight {
            cl.push(weight_relation(g, s, xi));
        }
    }
    if cl.max_degree >= 2 {
        for a in 0..g.dim {
            for b in 0..g.dim {
                cl.push(commutator_relation(g, a, b));
            }
        }
    }
}

/// Per-degree ranks of the enveloping relations modulo the reassociation ideal in the
/// weighted model.
pub fn ideal_j_ranks(g: &HomLieData, n_max: usize, max_weight: u32) -> Vec<usize> {
    let i = ideal_i_span(g.dim, &g.phi, n_max, max_weight).ranks();
    let all = weighted_relations(g, n_max, max_weight).ranks();
    all.iter().zip(&i).map(|(a, b)| a - b).collect()
}

/// Relations on weight-zero trees after folding weights into powers of `φ`: reassociators
/// with the decoration twist and the commutator relations, closed under grafting and `𝔞`.
pub fn folded_relations(g: &HomLieData, n_max: usize) -> IdealClosure {
    let ctx = TreeCtx::new(&g.phi, Shift::Decorations);
    let mut cl = IdealClosure::new(ctx, g.dim, n_max, 0);
    seed_reassociators(&mut cl, g.dim, 0);
    seed_enveloping(&mut cl, g, 0);
    cl.close();
    cl
}
