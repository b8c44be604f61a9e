//! Matched pairs of Hom-Hopf algebras and their double cross products.

use super::symmetries::check_module_coalgebra;
use super::{e, pw};
use crate::error::{Error, Result};
use crate::foundation::{tensor, tensor_operator, LinComb, LinearOperator, Scalar};
use crate::hom_core::{check_hom_module, ActionData, HomAlgebraData, HomCoalgebraData, HomHopfData, Side};
use crate::report::CheckReport;

/// `(U, V)` with `▷: V⊗U → U` and `◁: V⊗U → V`.
///
/// `U` has twists `φ` (algebra) and `ψ` (coalgebra), `V` has `α` and `β`.
/// `left` is indexed `(v, u)`, `right` is indexed `(u, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairHopf {
    pub u: HomHopfData,
    pub v: HomHopfData,
    pub left: ActionData,
    pub right: ActionData,
}

impl MatchedPairHopf {
    pub fn new(u: HomHopfData, v: HomHopfData, left: ActionData, right: ActionData) -> Result<Self> {
        let ok = left.side == Side::Left
            && left.acting_dim == v.dim()
            && left.carrier_dim == u.dim()
            && right.side == Side::Right
            && right.acting_dim == u.dim()
            && right.carrier_dim == v.dim();
        if !ok {
            return Err(Error::DimensionMismatch { expected: u.dim() * v.dim(), found: left.table.len() });
        }
        Ok(MatchedPairHopf { u, v, left, right })
    }

    /// Trivial actions `v▷u = ε(v)φ(u)` and `v◁u = ε(u)α(v)`.
    pub fn trivial(u: HomHopfData, v: HomHopfData) -> Result<Self> {
        let (du, dv) = (u.dim(), v.dim());
        let left = ActionData::from_fn(Side::Left, dv, du, u.alpha().clone(), |y, x| {
            u.alpha().image(x).scaled(&v.coalg.counit[y])
        })?;
        let right = ActionData::from_fn(Side::Right, du, dv, v.alpha().clone(), |x, y| {
            v.alpha().image(y).scaled(&u.coalg.counit[x])
        })?;
        Self::new(u, v, left, right)
    }

    /// `v ▷ u` on combinations.
    pub fn tri(&self, v: &LinComb<usize>, u: &LinComb<usize>) -> LinComb<usize> {
        self.left.act_lc(v, u)
    }

    /// `v ◁ u` on combinations.
    pub fn tli(&self, v: &LinComb<usize>, u: &LinComb<usize>) -> LinComb<usize> {
        self.right.act_lc(u, v)
    }
}

struct Twists {
    phi: LinearOperator,
    alpha: LinearOperator,
    phi_m1: LinearOperator,
    alpha_m1: LinearOperator,
    /// `α⁻¹β⁻¹`
    ab_m1: LinearOperator,
    /// `α⁻²β⁻¹`
    a2b_m1: LinearOperator,
    /// `φ⁻¹ψ⁻¹`
    pp_m1: LinearOperator,
    /// `φ⁻²ψ⁻¹`
    p2p_m1: LinearOperator,
    psi_m1: LinearOperator,
    beta_m1: LinearOperator,
}

impl Twists {
    fn new(p: &MatchedPairHopf) -> Self {
        let (phi, psi) = (p.u.alpha(), p.u.beta());
        let (alpha, beta) = (p.v.alpha(), p.v.beta());
        Twists {
            phi: phi.clone(),
            alpha: alpha.clone(),
            phi_m1: pw(phi, -1),
            alpha_m1: pw(alpha, -1),
            ab_m1: pw(alpha, -1).compose(&pw(beta, -1)),
            a2b_m1: pw(alpha, -2).compose(&pw(beta, -1)),
            pp_m1: pw(phi, -1).compose(&pw(psi, -1)),
            p2p_m1: pw(phi, -2).compose(&pw(psi, -1)),
            psi_m1: pw(psi, -1),
            beta_m1: pw(beta, -1),
        }
    }
}

fn mul_sum(a: &HomAlgebraData, terms: &[(LinComb<usize>, LinComb<usize>, Scalar)]) -> Option<LinComb<usize>> {
    let mut out = LinComb::zero();
    for (x, y, c) in terms {
        out.add_scaled(&a.mul_lc(x, y)?, c);
    }
    Some(out)
}

/// Module and module-coalgebra axioms for both actions (prefixed `left/` and `right/`),
/// the twist compatibilities and the four cross relations `v-rt-uu'`, `vv'-lt-u`,
/// `switch` and `actions-on-1`. Tuples whose products leave a truncation are skipped.
pub fn check_matched_pair_hopf(p: &MatchedPairHopf) -> CheckReport {
    let mut r = CheckReport::new();
    let mut left = check_hom_module(&p.v.alg, &p.left);
    left.merge(check_module_coalgebra(&p.v, &p.u.coalg, &p.left));
    r.merge_prefixed("left/", left);
    let mut right = check_hom_module(&p.u.alg, &p.right);
    right.merge(check_module_coalgebra(&p.u, &p.v.coalg, &p.right));
    r.merge_prefixed("right/", right);
    for id in ["rt-phi-compatibility", "lt-a-compatibility", "v-rt-uu'", "vv'-lt-u", "switch", "actions-on-1"] {
        r.declare(id);
    }
    let t = Twists::new(p);
    let (u, v) = (&p.u, &p.v);
    let (du, dv) = (u.dim(), v.dim());

    for y in 0..dv {
        for x in 0..du {
            let lhs = t.phi.apply(&p.tri(&e(y), &e(x)));
            let rhs = p.tri(t.alpha.image(y), t.phi.image(x));
            r.compare("rt-phi-compatibility", &[y, x], Some(lhs), Some(rhs));
            let lhs = t.alpha.apply(&p.tli(&e(y), &e(x)));
            let rhs = p.tli(t.alpha.image(y), t.phi.image(x));
            r.compare("lt-a-compatibility", &[y, x], Some(lhs), Some(rhs));
        }
    }

    // v ▷ (u u')
    for y in 0..dv {
        for x in 0..du {
            for x2 in 0..du {
                let lhs = u.alg.mul(x, x2).map(|m| p.tri(&e(y), m));
                let mut terms = Vec::new();
                for ((y1, y2), c) in v.coalg.comult[y].iter() {
                    for ((x1, x12), d) in u.coalg.comult[x].iter() {
                        let first = p.tri(t.ab_m1.image(*y1), t.psi_m1.image(*x1));
                        let moved = p.tli(t.a2b_m1.image(*y2), t.pp_m1.image(*x12));
                        terms.push((first, p.tri(&moved, &e(x2)), c * d));
                    }
                }
                r.compare("v-rt-uu'", &[y, x, x2], lhs, mul_sum(&u.alg, &terms));
            }
        }
    }

    // (v v') ◁ u
    for y in 0..dv {
        for y2 in 0..dv {
            for x in 0..du {
                let lhs = v.alg.mul(y, y2).map(|m| p.tli(m, &e(x)));
                let mut terms = Vec::new();
                for ((z1, z2), c) in v.coalg.comult[y2].iter() {
                    for ((x1, x12), d) in u.coalg.comult[x].iter() {
                        let inner = p.tri(t.ab_m1.image(*z1), t.p2p_m1.image(*x1));
                        let first = p.tli(&e(y), &inner);
                        let second = p.tli(t.beta_m1.image(*z2), t.pp_m1.image(*x12));
                        terms.push((first, second, c * d));
                    }
                }
                r.compare("vv'-lt-u", &[y, y2, x], lhs, mul_sum(&v.alg, &terms));
            }
        }
    }

    for y in 0..dv {
        for x in 0..du {
            let mut lhs = LinComb::zero();
            let mut rhs = LinComb::zero();
            for ((y1, y2), c) in v.coalg.comult[y].iter() {
                for ((x1, x12), d) in u.coalg.comult[x].iter() {
                    let k = c * d;
                    lhs.add_scaled(&tensor(&p.tli(&e(*y1), &e(*x1)), &p.tri(&e(*y2), &e(*x12))), &k);
                    rhs.add_scaled(&tensor(&p.tli(&e(*y2), &e(*x12)), &p.tri(&e(*y1), &e(*x1))), &k);
                }
            }
            r.compare("switch", &[y, x], Some(lhs), Some(rhs));
        }
    }

    for y in 0..dv {
        let lhs = p.tri(&e(y), u.unit());
        r.compare("actions-on-1", &[0, y], Some(lhs), Some(u.unit().scaled(&v.coalg.counit[y])));
    }
    for x in 0..du {
        let lhs = p.tli(v.unit(), &e(x));
        r.compare("actions-on-1", &[1, x], Some(lhs), Some(v.unit().scaled(&u.coalg.counit[x])));
    }
    r
}

/// Index of `u_i ⊗ v_j` in a tensor product whose second factor has dimension `dv`.
pub fn pair_index(i: usize, j: usize, dv: usize) -> usize {
    i * dv + j
}

/// The double cross product on `U⊗V`, refusing pairs that fail any matched-pair equation.
pub fn build_double_cross_product(p: &MatchedPairHopf) -> Result<HomHopfData> {
    let report = check_matched_pair_hopf(p);
    if let Some(id) = report.failed_ids().first() {
        return Err(Error::NotMatchedPair(id.to_string()));
    }
    double_cross_product_unchecked(p)
}

/// The double cross product tables without checking the matched-pair equations.
///
/// Product: `(u⊗v)(u'⊗v') = u(α⁻¹β⁻¹(v₁)▷φ⁻¹ψ⁻¹(u'₁)) ⊗ (α⁻¹β⁻¹(v₂)◁φ⁻¹ψ⁻¹(u'₂))v'`,
/// tensor coproduct, twists `φ⊗α` and `ψ⊗β`, and antipode `(1⊗S(α⁻¹v))(S(φ⁻¹u)⊗1)`.
pub fn double_cross_product_unchecked(p: &MatchedPairHopf) -> Result<HomHopfData> {
    let t = Twists::new(p);
    let (u, v) = (&p.u, &p.v);
    let (du, dv) = (u.dim(), v.dim());
    let dim = du * dv;
    let idx = |i: usize, j: usize| pair_index(i, j, dv);

    let product = |x: usize, y: usize, x2: usize, y2: usize| -> Option<LinComb<usize>> {
        let mut out = LinComb::zero();
        for ((y1, y12), c) in v.coalg.comult[y].iter() {
            for ((z1, z2), d) in u.coalg.comult[x2].iter() {
                let l = u.alg.mul_lc(&e(x), &p.tri(t.ab_m1.image(*y1), t.pp_m1.image(*z1)))?;
                let rr = v.alg.mul_lc(&p.tli(t.ab_m1.image(*y12), t.pp_m1.image(*z2)), &e(y2))?;
                let k = c * d;
                for (a, f) in l.iter() {
                    for (b, g) in rr.iter() {
                        out.add_term(idx(*a, *b), &k * f * g);
                    }
                }
            }
        }
        Some(out)
    };

    let mut mult = Vec::with_capacity(dim * dim);
    for x in 0..du {
        for y in 0..dv {
            for x2 in 0..du {
                for y2 in 0..dv {
                    mult.push(product(x, y, x2, y2));
                }
            }
        }
    }
    let unit = tensor(u.unit(), v.unit()).map(|(a, b)| e(idx(*a, *b)));
    let alg = HomAlgebraData::new(dim, mult, unit.clone(), tensor_operator(u.alpha(), v.alpha()))?;

    let mut comult = Vec::with_capacity(dim);
    for x in 0..du {
        for y in 0..dv {
            let mut d = LinComb::zero();
            for ((x1, x12), c) in u.coalg.comult[x].iter() {
                for ((y1, y12), k) in v.coalg.comult[y].iter() {
                    d.add_term((idx(*x1, *y1), idx(*x12, *y12)), c * k);
                }
            }
            comult.push(d);
        }
    }
    let counit = (0..dim).map(|k| &u.coalg.counit[k / dv] * &v.coalg.counit[k % dv]).collect();
    let coalg = HomCoalgebraData::new(dim, comult, counit, tensor_operator(u.beta(), v.beta()))?;

    let lift_u = |x: &LinComb<usize>| -> LinComb<usize> {
        let mut out = LinComb::zero();
        for (a, c) in x.iter() {
            for (b, d) in v.unit().iter() {
                out.add_term(idx(*a, *b), c * d);
            }
        }
        out
    };
    let lift_v = |y: &LinComb<usize>| -> LinComb<usize> {
        let mut out = LinComb::zero();
        for (a, c) in u.unit().iter() {
            for (b, d) in y.iter() {
                out.add_term(idx(*a, *b), c * d);
            }
        }
        out
    };
    let mut s_images = Vec::with_capacity(dim);
    for x in 0..du {
        for y in 0..dv {
            let left = lift_v(&v.antipode.apply(t.alpha_m1.image(y)));
            let right = lift_u(&u.antipode.apply(t.phi_m1.image(x)));
            let s = alg.mul_lc(&left, &right).ok_or(Error::TruncationOverflow {
                degree: u.degrees.as_ref().map_or(0, |d| d[x]) + v.degrees.as_ref().map_or(0, |d| d[y]),
                bound: u.filtration().map_or(0, |f| f.bound),
            })?;
            s_images.push(s);
        }
    }
    let antipode = LinearOperator::new(dim, s_images)?;
    let mut out = HomHopfData::new(alg, coalg, antipode)?;
    if let (Some(a), Some(b)) = (&u.degrees, &v.degrees) {
        out.degrees = Some((0..dim).map(|k| a[k / dv] + b[k % dv]).collect());
    }
    let label = |h: &HomHopfData, i: usize| h.label(i);
    out.labels = Some((0..dim).map(|k| format!("{}⊗{}", label(u, k / dv), label(v, k % dv))).collect());
    Ok(out)
}
