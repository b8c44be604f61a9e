//! Weighted planar binary trees with decorated leaves.
//!
//! A shape is stored as its preorder code: `1` for an internal node, `0` for a leaf.
//! The empty code is the external unit `𝟏`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;

use crate::foundation::{LinComb, LinearOperator, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    pub code: Vec<u8>,
    pub weights: Vec<u32>,
    pub decor: Vec<usize>,
}

impl Tree {
    pub fn unit() -> Self {
        Tree { code: Vec::new(), weights: Vec::new(), decor: Vec::new() }
    }

    pub fn leaf(weight: u32, xi: usize) -> Self {
        Tree { code: vec![0], weights: vec![weight], decor: vec![xi] }
    }

    pub fn degree(&self) -> usize {
        self.decor.len()
    }

    pub fn is_unit(&self) -> bool {
        self.code.is_empty()
    }

    pub fn is_leaf(&self) -> bool {
        self.code.len() == 1
    }

    pub fn max_weight(&self) -> u32 {
        self.weights.iter().copied().max().unwrap_or(0)
    }

    /// Root join of two non-unit trees, no conventions applied.
    pub fn join(a: &Tree, b: &Tree) -> Tree {
        debug_assert!(!a.is_unit() && !b.is_unit());
        let mut code = Vec::with_capacity(1 + a.code.len() + b.code.len());
        code.push(1);
        code.extend_from_slice(&a.code);
        code.extend_from_slice(&b.code);
        let weights = [a.weights.as_slice(), b.weights.as_slice()].concat();
        let decor = [a.decor.as_slice(), b.decor.as_slice()].concat();
        Tree { code, weights, decor }
    }

    /// The two subtrees under the root, for a tree with at least two leaves.
    pub fn split(&self) -> Option<(Tree, Tree)> {
        if self.code.len() < 3 {
            return None;
        }
        let mut need = 1usize;
        let mut end = 1;
        let mut leaves = 0;
        while need > 0 {
            if self.code[end] == 1 {
                need += 1;
            } else {
                need -= 1;
                leaves += 1;
            }
            end += 1;
        }
        let left = Tree {
            code: self.code[1..end].to_vec(),
            weights: self.weights[..leaves].to_vec(),
            decor: self.decor[..leaves].to_vec(),
        };
        let right = Tree {
            code: self.code[end..].to_vec(),
            weights: self.weights[leaves..].to_vec(),
            decor: self.decor[leaves..].to_vec(),
        };
        Some((left, right))
    }

    pub fn with_zero_weights(&self) -> Tree {
        Tree { weights: vec![0; self.degree()], ..self.clone() }
    }

    /// Renders `𝟏`, leaves as their label (with `^s` for weight `s`), and joins as `(a∨b)`.
    pub fn render(&self, labels: &dyn Fn(usize) -> String) -> String {
        if self.is_unit() {
            return "𝟏".into();
        }
        if self.is_leaf() {
            let w = self.weights[0];
            let l = labels(self.decor[0]);
            return if w == 0 { l } else { format!("{l}^{w}") };
        }
        let (a, b) = self.split().expect("internal node");
        let wrap = |t: &Tree| if t.is_leaf() { t.render(labels) } else { format!("({})", t.render(labels)) };
        format!("{}∨{}", wrap(&a), wrap(&b))
    }
}

impl Ord for Tree {
    /// Higher degree first, then nonzero weights first, then ascending code and decorations.
    /// Row reduction pivots on the smallest key, so surviving normal forms are of weight zero.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.weights.cmp(&self.weights))
            .then_with(|| self.code.cmp(&other.code))
            .then_with(|| self.decor.cmp(&other.decor))
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&|i| format!("e{i}")))
    }
}

/// All shapes with `n ≥ 1` leaves.
pub fn shapes(n: usize) -> Vec<Vec<u8>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for k in 1..n {
        for l in shapes(k) {
            for r in shapes(n - k) {
                let mut c = vec![1];
                c.extend_from_slice(&l);
                c.extend_from_slice(&r);
                out.push(c);
            }
        }
    }
    out
}

fn tuples(len: usize, base: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..base).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// Every tree of degree `n ≥ 1` with decorations in `0..dim` and leaf weights `≤ max_weight`.
pub fn trees_of_degree(n: usize, dim: usize, max_weight: u32) -> Vec<Tree> {
    let mut out = Vec::new();
    let weights = tuples(n, max_weight as usize + 1);
    for code in shapes(n) {
        for w in &weights {
            for d in tuples(n, dim) {
                out.push(Tree { code: code.clone(), weights: w.iter().map(|x| *x as u32).collect(), decor: d });
            }
        }
    }
    out
}

/// Which map the grafting conventions `t∨𝟏 = 𝟏∨t = 𝔞(t)` use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shift {
    /// Apply the Lie twist to every decoration, weights unchanged.
    Decorations,
    /// Raise every leaf weight by one, decorations unchanged.
    Weights,
}

/// Decoration twist and grafting convention shared by the tree operations.
#[derive(Clone, Debug)]
pub struct TreeCtx {
    pub phi: LinearOperator,
    pub shift: Shift,
}

impl TreeCtx {
    pub fn new(phi: &LinearOperator, shift: Shift) -> Self {
        TreeCtx { phi: phi.clone(), shift }
    }

    /// Applies `op` to every decoration of `t`.
    pub fn map_decorations(&self, t: &Tree, op: &LinearOperator) -> LinComb<Tree> {
        let mut acc: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for d in &t.decor {
            let mut next = Vec::new();
            for (prefix, c) in &acc {
                for (k, v) in op.image(*d).iter() {
                    let mut p = prefix.clone();
                    p.push(*k);
                    next.push((p, c * v));
                }
            }
            acc = next;
        }
        LinComb::from_terms(acc.into_iter().map(|(decor, c)| (Tree { decor, ..t.clone() }, c)))
    }

    /// `𝔞^k` on a single tree; negative powers only with [`Shift::Decorations`].
    pub fn a_tree(&self, t: &Tree, k: i64) -> LinComb<Tree> {
        if t.is_unit() || k == 0 {
            return LinComb::basis(t.clone());
        }
        match self.shift {
            Shift::Decorations => self.map_decorations(t, &self.phi.power(k).expect("phi is invertible")),
            Shift::Weights => {
                assert!(k > 0, "weight shift is not invertible");
                let weights = t.weights.iter().map(|w| w + k as u32).collect();
                LinComb::basis(Tree { weights, ..t.clone() })
            }
        }
    }

    pub fn a_shift(&self, x: &LinComb<Tree>, k: i64) -> LinComb<Tree> {
        x.map(|t| self.a_tree(t, k))
    }

    pub fn graft_trees(&self, a: &Tree, b: &Tree) -> LinComb<Tree> {
        match (a.is_unit(), b.is_unit()) {
            (true, true) => LinComb::basis(Tree::unit()),
            (false, true) => self.a_tree(a, 1),
            (true, false) => self.a_tree(b, 1),
            (false, false) => LinComb::basis(Tree::join(a, b)),
        }
    }

    pub fn graft(&self, x: &LinComb<Tree>, y: &LinComb<Tree>) -> LinComb<Tree> {
        crate::foundation::bilinear(x, y, |a, b| self.graft_trees(a, b))
    }

    /// Sum over ordered splittings of the leaves, each side simplified by the grafting conventions.
    pub fn coproduct_tree(&self, t: &Tree) -> LinComb<(Tree, Tree)> {
        if t.is_unit() {
            return LinComb::basis((Tree::unit(), Tree::unit()));
        }
        if t.is_leaf() {
            return LinComb::from_terms([((t.clone(), Tree::unit()), Scalar::one()), ((Tree::unit(), t.clone()), Scalar::one())]);
        }
        let (a, b) = t.split().expect("internal node");
        let (da, db) = (self.coproduct_tree(&a), self.coproduct_tree(&b));
        let mut out = LinComb::zero();
        for ((a1, a2), c) in da.iter() {
            for ((b1, b2), d) in db.iter() {
                let left = self.graft_trees(a1, b1);
                let right = self.graft_trees(a2, b2);
                out.add_scaled(&crate::foundation::tensor(&left, &right), &(c * d));
            }
        }
        out
    }

    pub fn coproduct(&self, x: &LinComb<Tree>) -> LinComb<(Tree, Tree)> {
        x.map(|t| self.coproduct_tree(t))
    }

    pub fn counit(&self, x: &LinComb<Tree>) -> Scalar {
        x.coeff(&Tree::unit())
    }

    pub fn antipode_tree(&self, t: &Tree) -> LinComb<Tree> {
        if t.is_unit() {
            return LinComb::basis(t.clone());
        }
        if t.is_leaf() {
            return LinComb::basis(t.clone()).neg();
        }
        let (a, b) = t.split().expect("internal node");
        self.graft(&self.antipode_tree(&b), &self.antipode_tree(&a))
    }

    pub fn antipode(&self, x: &LinComb<Tree>) -> LinComb<Tree> {
        x.map(|t| self.antipode_tree(t))
    }

    /// Replaces each leaf `(s, ξ)` by `(0, φˢ(ξ))`.
    pub fn fold_tree(&self, t: &Tree) -> LinComb<Tree> {
        if t.weights.iter().all(|w| *w == 0) {
            return LinComb::basis(t.clone());
        }
        let mut acc: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for (d, w) in t.decor.iter().zip(&t.weights) {
            let img = self.phi.power(*w as i64).expect("phi is invertible").image(*d).clone();
            let mut next = Vec::new();
            for (prefix, c) in &acc {
                for (k, v) in img.iter() {
                    let mut p = prefix.clone();
                    p.push(*k);
                    next.push((p, c * v));
                }
            }
            acc = next;
        }
        LinComb::from_terms(acc.into_iter().map(|(decor, c)| (Tree { decor, ..t.with_zero_weights() }, c)))
    }

    pub fn fold(&self, x: &LinComb<Tree>) -> LinComb<Tree> {
        x.map(|t| self.fold_tree(t))
    }
}

/// Largest degree appearing in `x` (0 for the zero vector).
pub fn max_degree(x: &LinComb<Tree>) -> usize {
    x.keys().map(Tree::degree).max().unwrap_or(0)
}

pub fn unit_lc() -> LinComb<Tree> {
    LinComb::basis(Tree::unit())
}

/// `(Δ ⊗ Id)Δ − (Id ⊗ Δ)Δ` on a single tree, zero when coassociative there.
pub fn coassociator(ctx: &TreeCtx, t: &Tree) -> LinComb<(Tree, Tree, Tree)> {
    let d = ctx.coproduct_tree(t);
    let mut out = LinComb::zero();
    for ((a, b), c) in d.iter() {
        for ((a1, a2), e) in ctx.coproduct_tree(a).iter() {
            out.add_term((a1.clone(), a2.clone(), b.clone()), c * e);
        }
        for ((b1, b2), e) in ctx.coproduct_tree(b).iter() {
            out.add_term((a.clone(), b1.clone(), b2.clone()), -(c * e));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::int;

    fn ctx() -> TreeCtx {
        TreeCtx::new(&LinearOperator::identity(2), Shift::Decorations)
    }

    #[test]
    fn split_inverts_join() {
        for n in 2..5 {
            for t in trees_of_degree(n, 2, 1) {
                let (a, b) = t.split().unwrap();
                assert_eq!(Tree::join(&a, &b), t);
            }
        }
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..6).map(|n| shapes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14]);
    }

    #[test]
    fn grafting_conventions() {
        let c = ctx();
        let one = Tree::unit();
        let l = Tree::leaf(0, 1);
        assert_eq!(c.graft_trees(&one, &one), unit_lc());
        let w = TreeCtx::new(&LinearOperator::identity(2), Shift::Weights);
        assert_eq!(w.graft_trees(&l, &one), LinComb::basis(Tree::leaf(1, 1)));
        assert_eq!(w.graft_trees(&one, &l), LinComb::basis(Tree::leaf(1, 1)));
        let both = c.graft_trees(&l, &Tree::leaf(0, 0));
        assert_eq!(both, LinComb::basis(Tree { code: vec![1, 0, 0], weights: vec![0, 0], decor: vec![1, 0] }));
    }

    #[test]
    fn decorated_shift_is_linear_in_decorations() {
        let minus = TreeCtx::new(&LinearOperator::scalar(1, &int(-1)), Shift::Decorations);
        let l = Tree::leaf(0, 0);
        assert_eq!(minus.a_tree(&l, 1), LinComb::term(l.clone(), int(-1)));
        assert_eq!(minus.a_tree(&Tree::unit(), 1), unit_lc());
    }

    #[test]
    fn leaf_and_pair_coproducts() {
        let c = ctx();
        let l = Tree::leaf(0, 0);
        assert_eq!(c.coproduct_tree(&l).len(), 2);
        let t = Tree::join(&Tree::leaf(0, 0), &Tree::leaf(0, 1));
        let d = c.coproduct_tree(&t);
        assert_eq!(d.len(), 4);
        assert_eq!(d.coeff(&(Tree::leaf(0, 0), Tree::leaf(0, 1))), int(1));
        assert_eq!(d.coeff(&(Tree::leaf(0, 1), Tree::leaf(0, 0))), int(1));
    }

    #[test]
    fn antipode_reverses_pairs() {
        let c = ctx();
        let t = Tree::join(&Tree::leaf(0, 0), &Tree::leaf(0, 1));
        let s = c.antipode_tree(&t);
        assert_eq!(s, LinComb::basis(Tree::join(&Tree::leaf(0, 1), &Tree::leaf(0, 0))));
    }

    #[test]
    fn ordering_puts_weighted_and_high_degree_first() {
        let hi = Tree::join(&Tree::leaf(0, 0), &Tree::leaf(0, 0));
        assert!(hi < Tree::leaf(0, 0));
        assert!(Tree::leaf(1, 0) < Tree::leaf(0, 0));
        assert!(Tree::leaf(0, 0) < Tree::unit());
    }

    #[test]
    fn render_nested() {
        let t = Tree::join(&Tree::join(&Tree::leaf(0, 0), &Tree::leaf(2, 1)), &Tree::leaf(0, 0));
        assert_eq!(t.to_string(), "(e0∨e1^2)∨e0");
    }
}
