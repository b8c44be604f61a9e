//! Actions between the enveloping algebras of a matched pair of Hom-Lie algebras.
//!
//! Every action is evaluated recursively on raw trees and only then projected to
//! normal forms; [`check_action_descent`] confirms that the relation spaces are
//! respected, so the projected tables do not depend on representatives.

use super::tree::{Tree, TreeCtx};
use super::truncated::{build_truncated_uea, TruncatedUEA};
use crate::error::{Error, Result};
use crate::foundation::{LinComb, LinearOperator};
use crate::hom_core::{ActionData, Side};
use crate::hom_lie::{check_matched_pair_lie, MatchedPairLie};
use crate::report::CheckReport;

/// Tree-level evaluator for the actions induced by a matched pair `(g, h)`.
pub struct PairActions<'a> {
    pub p: &'a MatchedPairLie,
    pub cg: TreeCtx,
    pub ch: TreeCtx,
    phi: Vec<LinearOperator>,
    alpha: Vec<LinearOperator>,
}

const POW_RANGE: i64 = 4;

impl<'a> PairActions<'a> {
    pub fn new(p: &'a MatchedPairLie) -> Self {
        let pows = |op: &LinearOperator| (-POW_RANGE..=POW_RANGE).map(|k| op.power(k).expect("invertible twist")).collect();
        PairActions {
            p,
            cg: TreeCtx::new(&p.g.phi, super::tree::Shift::Decorations),
            ch: TreeCtx::new(&p.h.phi, super::tree::Shift::Decorations),
            phi: pows(&p.g.phi),
            alpha: pows(&p.h.phi),
        }
    }

    fn phi(&self, k: i64) -> &LinearOperator {
        &self.phi[(k + POW_RANGE) as usize]
    }

    fn alpha(&self, k: i64) -> &LinearOperator {
        &self.alpha[(k + POW_RANGE) as usize]
    }

    /// The `g`-vector `φˢ(ξ)` carried by a leaf `(s, ξ)`.
    fn leaf_g(&self, t: &Tree) -> LinComb<usize> {
        self.p.g.phi_pow(t.weights[0] as i64).image(t.decor[0]).clone()
    }

    fn leaf_h(&self, t: &Tree) -> LinComb<usize> {
        self.p.h.phi_pow(t.weights[0] as i64).image(t.decor[0]).clone()
    }

    /// `η ◁ t` for `η ∈ h` and a `g`-tree `t`.
    pub fn h_ract(&self, eta: &LinComb<usize>, t: &Tree) -> LinComb<usize> {
        if eta.is_zero() {
            return LinComb::zero();
        }
        if t.is_unit() {
            return self.alpha(1).apply(eta);
        }
        if t.is_leaf() {
            return self.p.tli_lc(eta, &self.leaf_g(t));
        }
        let (a, b) = t.split().expect("internal node");
        let inner = self.h_ract(&self.alpha(-1).apply(eta), &a);
        self.h_ract_lc(&inner, &self.cg.a_tree(&b, 1))
    }

    pub fn h_ract_lc(&self, eta: &LinComb<usize>, x: &LinComb<Tree>) -> LinComb<usize> {
        let mut out = LinComb::zero();
        for (t, c) in x.iter() {
            out.add_scaled(&self.h_ract(eta, t), c);
        }
        out
    }

    /// `η ▷ t` for `η ∈ h` and a `g`-tree `t`, with the `◁`-correction on grafts.
    pub fn h_lact(&self, eta: &LinComb<usize>, t: &Tree) -> LinComb<Tree> {
        if eta.is_zero() || t.is_unit() {
            return LinComb::zero();
        }
        if t.is_leaf() {
            let s = t.weights[0] as i64;
            let img = self.p.tri_lc(&self.alpha(-s).apply(eta), &LinComb::basis(t.decor[0]));
            return LinComb::from_terms(img.iter().map(|(k, c)| (Tree::leaf(t.weights[0], *k), c.clone())));
        }
        let (a, b) = t.split().expect("internal node");
        let cg = &self.cg;
        let mut out = cg.graft(&self.h_lact(&self.alpha(-1).apply(eta), &a), &cg.a_tree(&b, 1));
        let eta2 = self.alpha(-2).apply(eta);
        for ((a1, a2), c) in cg.coproduct_tree(&a).iter() {
            let moved = self.h_ract_lc(&eta2, &cg.a_tree(a2, -1));
            let acted = self.h_lact_lc(&moved, &LinComb::basis(b.clone()));
            out.add_scaled(&cg.graft(&cg.a_tree(a1, 1), &acted), c);
        }
        out
    }

    pub fn h_lact_lc(&self, eta: &LinComb<usize>, x: &LinComb<Tree>) -> LinComb<Tree> {
        let mut out = LinComb::zero();
        for (t, c) in x.iter() {
            out.add_scaled(&self.h_lact(eta, t), c);
        }
        out
    }

    /// `Ω ▷ x` for an `h`-tree `Ω` and `g`-trees `x`.
    pub fn uh_on_ug(&self, omega: &Tree, x: &LinComb<Tree>) -> LinComb<Tree> {
        if omega.is_unit() {
            return self.cg.a_shift(x, 1);
        }
        if omega.is_leaf() {
            return self.h_lact_lc(&self.leaf_h(omega), x);
        }
        let (a, b) = omega.split().expect("internal node");
        let inner = self.uh_on_ug(&b, &self.cg.a_shift(x, -1));
        self.uh_on_ug_lc(&self.ch.a_tree(&a, 1), &inner)
    }

    pub fn uh_on_ug_lc(&self, omega: &LinComb<Tree>, x: &LinComb<Tree>) -> LinComb<Tree> {
        let mut out = LinComb::zero();
        for (w, c) in omega.iter() {
            out.add_scaled(&self.uh_on_ug(w, x), c);
        }
        out
    }

    /// `Ω ▷ ξ` for an `h`-tree `Ω` and `ξ ∈ g`; the degree-one part of [`Self::uh_on_ug`].
    pub fn uh_on_g(&self, omega: &Tree, xi: &LinComb<usize>) -> LinComb<usize> {
        if omega.is_unit() {
            return self.phi(1).apply(xi);
        }
        if omega.is_leaf() {
            return self.p.tri_lc(&self.leaf_h(omega), xi);
        }
        let (a, b) = omega.split().expect("internal node");
        let inner = self.uh_on_g(&b, &self.phi(-1).apply(xi));
        let mut out = LinComb::zero();
        for (w, c) in self.ch.a_tree(&a, 1).iter() {
            out.add_scaled(&self.uh_on_g(w, &inner), c);
        }
        out
    }

    /// `Ω ◁ ξ` for an `h`-tree `Ω` and `ξ ∈ g`.
    pub fn uh_ract_g(&self, omega: &Tree, xi: &LinComb<usize>) -> LinComb<Tree> {
        if omega.is_unit() || xi.is_zero() {
            return LinComb::zero();
        }
        if omega.is_leaf() {
            let img = self.p.tli_lc(&self.leaf_h(omega), xi);
            return LinComb::from_terms(img.iter().map(|(k, c)| (Tree::leaf(0, *k), c.clone())));
        }
        let (a, b) = omega.split().expect("internal node");
        let ch = &self.ch;
        let xi2 = self.phi(-2).apply(xi);
        let mut out = LinComb::zero();
        for ((b1, b2), c) in ch.coproduct_tree(&b).iter() {
            let mut moved = LinComb::zero();
            for (w, d) in ch.a_tree(b1, -1).iter() {
                moved.add_scaled(&self.uh_on_g(w, &xi2), d);
            }
            let left = self.uh_ract_g(&a, &moved);
            out.add_scaled(&ch.graft(&left, &ch.a_tree(b2, 1)), c);
        }
        let tail = self.uh_ract_g(&b, &self.phi(-1).apply(xi));
        out.add_assign(&ch.graft(&ch.a_tree(&a, 1), &tail));
        out
    }

    /// `Ω ◁ t` for `h`-trees `Ω` and a `g`-tree `t`.
    pub fn uh_ract(&self, omega: &LinComb<Tree>, t: &Tree) -> LinComb<Tree> {
        if t.is_unit() {
            return self.ch.a_shift(omega, 1);
        }
        if t.is_leaf() {
            let xi = self.leaf_g(t);
            let mut out = LinComb::zero();
            for (w, c) in omega.iter() {
                out.add_scaled(&self.uh_ract_g(w, &xi), c);
            }
            return out;
        }
        let (a, b) = t.split().expect("internal node");
        let inner = self.uh_ract(&self.ch.a_shift(omega, -1), &a);
        let mut out = LinComb::zero();
        for (w, c) in self.cg.a_tree(&b, 1).iter() {
            out.add_scaled(&self.uh_ract(&inner, w), c);
        }
        out
    }

    pub fn uh_ract_lc(&self, omega: &LinComb<Tree>, x: &LinComb<Tree>) -> LinComb<Tree> {
        let mut out = LinComb::zero();
        for (t, c) in x.iter() {
            out.add_scaled(&self.uh_ract(omega, t), c);
        }
        out
    }
}

/// Right action of `U_N(g)` on `h`: `table[u * dim h + η] = η ◁ u`.
pub fn act_u_on_h(p: &MatchedPairLie, ug: &TruncatedUEA) -> Result<ActionData> {
    let pa = PairActions::new(p);
    ActionData::from_fn(Side::Right, ug.dim(), p.h.dim, p.h.phi.clone(), |u, eta| {
        pa.h_ract(&LinComb::basis(eta), &ug.basis[u])
    })
}

/// Left action of `h` on `U_N(g)`: `table[η * dim U + u] = η ▷ u`, carrier map the extension of `φ`.
pub fn act_h_on_u(p: &MatchedPairLie, ug: &TruncatedUEA) -> Result<ActionData> {
    let pa = PairActions::new(p);
    let mut table = Vec::with_capacity(p.h.dim * ug.dim());
    for eta in 0..p.h.dim {
        for u in 0..ug.dim() {
            table.push(ug.project(&pa.h_lact(&LinComb::basis(eta), &ug.basis[u]))?);
        }
    }
    ActionData::new(Side::Left, p.h.dim, ug.dim(), table, ug.hopf.alpha().clone())
}

/// Enveloping algebras of both sides of a matched pair with the lifted actions
/// `▷: U(h)⊗U(g) → U(g)` and `◁: U(h)⊗U(g) → U(h)` on normal forms.
#[derive(Clone, Debug)]
pub struct LiftedPair {
    pub pair: MatchedPairLie,
    pub ug: TruncatedUEA,
    pub uh: TruncatedUEA,
    pub left: ActionData,
    pub right: ActionData,
}

/// Builds `U_N(g)`, `U_N(h)` and both lifted actions, refusing pairs that are not matched.
pub fn lift_to_uh_action(p: &MatchedPairLie, n: usize) -> Result<LiftedPair> {
    let report = check_matched_pair_lie(p);
    if let Some(id) = report.failed_ids().first() {
        return Err(Error::NotMatchedPair(id.to_string()));
    }
    lift_unchecked(p, n)
}

/// As [`lift_to_uh_action`] without the matched-pair precondition.
pub fn lift_unchecked(p: &MatchedPairLie, n: usize) -> Result<LiftedPair> {
    let ug = build_truncated_uea(&p.g, n)?;
    let uh = build_truncated_uea(&p.h, n)?;
    let pa = PairActions::new(p);
    let mut left = Vec::with_capacity(uh.dim() * ug.dim());
    for w in 0..uh.dim() {
        for t in 0..ug.dim() {
            left.push(ug.project(&pa.uh_on_ug(&uh.basis[w], &LinComb::basis(ug.basis[t].clone())))?);
        }
    }
    let mut right = Vec::with_capacity(ug.dim() * uh.dim());
    for t in 0..ug.dim() {
        for w in 0..uh.dim() {
            right.push(uh.project(&pa.uh_ract(&LinComb::basis(uh.basis[w].clone()), &ug.basis[t]))?);
        }
    }
    let left = ActionData::new(Side::Left, uh.dim(), ug.dim(), left, ug.hopf.alpha().clone())?;
    let right = ActionData::new(Side::Right, ug.dim(), uh.dim(), right, uh.hopf.alpha().clone())?;
    Ok(LiftedPair { pair: p.clone(), ug, uh, left, right })
}

/// Confirms that every action sends relations to relations, for each spanning row of
/// the relation spaces of `U_N(g)` and `U_N(h)`.
pub fn check_action_descent(lp: &LiftedPair) -> CheckReport {
    let mut r = CheckReport::new();
    let ids = [
        "descent-h-acts-on-g-relations",
        "descent-g-relations-act-on-h",
        "descent-uh-on-g-relations",
        "descent-uh-relations-on-ug",
        "descent-g-relations-on-uh",
        "descent-uh-relations-under-ug",
    ];
    for id in ids {
        r.declare(id);
    }
    let pa = PairActions::new(&lp.pair);
    let (ug, uh) = (&lp.ug, &lp.uh);
    let in_g = |x: &LinComb<Tree>| ug.relations.reduce(&ug.ctx.fold(x)).is_zero();
    let in_h = |x: &LinComb<Tree>| uh.relations.reduce(&uh.ctx.fold(x)).is_zero();
    for (k, v) in ug.relations.rows().enumerate() {
        for eta in 0..lp.pair.h.dim {
            let e = LinComb::basis(eta);
            r.assert_true(ids[0], &[k, eta], in_g(&pa.h_lact_lc(&e, v)));
            r.assert_true(ids[1], &[k, eta], pa.h_ract_lc(&e, v).is_zero());
        }
        for (w, omega) in uh.basis.iter().enumerate() {
            r.assert_true(ids[2], &[k, w], in_g(&pa.uh_on_ug(omega, v)));
            r.assert_true(ids[4], &[k, w], in_h(&pa.uh_ract_lc(&LinComb::basis(omega.clone()), v)));
        }
    }
    for (k, v) in uh.relations.rows().enumerate() {
        for (t, tree) in ug.basis.iter().enumerate() {
            let x = LinComb::basis(tree.clone());
            r.assert_true(ids[3], &[k, t], in_g(&pa.uh_on_ug_lc(v, &x)));
            r.assert_true(ids[5], &[k, t], in_h(&pa.uh_ract(v, tree)));
        }
    }
    r
}

/// Perturbs one entry of a lifted right action: `Ω_w ◁ u_t` gains `c·Ω_target`.
pub fn perturb_right_entry(lp: &LiftedPair, t: usize, w: usize, target: usize, c: crate::foundation::Scalar) -> LiftedPair {
    let mut out = lp.clone();
    let idx = t * out.right.carrier_dim + w;
    out.right.table[idx].add_term(target, c);
    out
}
