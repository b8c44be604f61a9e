use num_traits::Zero;

use super::data::{truncate, HomAlgebraData, HomCoalgebraData};
use crate::error::{Error, Result};
use crate::foundation::{LinComb, LinearOperator};
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A Hom-module: `table[a * carrier_dim + m]` is the action of acting basis `a` on carrier basis `m`,
/// whichever side the action is written on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionData {
    pub side: Side,
    pub acting_dim: usize,
    pub carrier_dim: usize,
    pub table: Vec<LinComb<usize>>,
    pub gamma: LinearOperator,
}

impl ActionData {
    pub fn new(
        side: Side,
        acting_dim: usize,
        carrier_dim: usize,
        table: Vec<LinComb<usize>>,
        gamma: LinearOperator,
    ) -> Result<Self> {
        if table.len() != acting_dim * carrier_dim {
            return Err(Error::DimensionMismatch { expected: acting_dim * carrier_dim, found: table.len() });
        }
        if gamma.dim() != carrier_dim {
            return Err(Error::DimensionMismatch { expected: carrier_dim, found: gamma.dim() });
        }
        for v in &table {
            if let Some(k) = v.keys().find(|k| **k >= carrier_dim) {
                return Err(Error::UnknownBasisIndex(*k));
            }
        }
        Ok(ActionData { side, acting_dim, carrier_dim, table, gamma })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> LinComb<usize>>(
        side: Side,
        acting_dim: usize,
        carrier_dim: usize,
        gamma: LinearOperator,
        mut f: F,
    ) -> Result<Self> {
        let mut table = Vec::with_capacity(acting_dim * carrier_dim);
        for a in 0..acting_dim {
            for m in 0..carrier_dim {
                table.push(f(a, m));
            }
        }
        Self::new(side, acting_dim, carrier_dim, table, gamma)
    }

    pub fn act(&self, a: usize, m: usize) -> &LinComb<usize> {
        &self.table[a * self.carrier_dim + m]
    }

    pub fn act_lc(&self, a: &LinComb<usize>, m: &LinComb<usize>) -> LinComb<usize> {
        crate::foundation::bilinear(a, m, |i, j| self.act(*i, *j).clone())
    }
}

/// A right Hom-comodule: `table[m]` is `∇(e_m)` as pairs `(carrier, coalgebra)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionData {
    pub carrier_dim: usize,
    pub coalg_dim: usize,
    pub table: Vec<LinComb<(usize, usize)>>,
    pub theta: LinearOperator,
}

impl CoactionData {
    pub fn new(carrier_dim: usize, coalg_dim: usize, table: Vec<LinComb<(usize, usize)>>, theta: LinearOperator) -> Result<Self> {
        if table.len() != carrier_dim || theta.dim() != carrier_dim {
            return Err(Error::DimensionMismatch { expected: carrier_dim, found: table.len() });
        }
        for v in &table {
            if let Some((m, c)) = v.keys().find(|(m, c)| *m >= carrier_dim || *c >= coalg_dim) {
                return Err(Error::UnknownBasisIndex((*m).max(*c)));
            }
        }
        Ok(CoactionData { carrier_dim, coalg_dim, table, theta })
    }

    pub fn coact_lc(&self, x: &LinComb<usize>) -> LinComb<(usize, usize)> {
        x.map(|i| self.table[*i].clone())
    }
}

/// Hom-module axioms: `(a•a')▷γ(v) = α(a)▷(a'▷v)` and `η▷v = γ(v)`, or their right-handed mirrors.
pub fn check_hom_module(a: &HomAlgebraData, m: &ActionData) -> CheckReport {
    let mut r = CheckReport::new();
    r.declare("module-assoc");
    r.declare("module-unit");
    let g = &m.gamma;
    for x in 0..a.dim {
        for y in 0..a.dim {
            for v in 0..m.carrier_dim {
                let (lhs, rhs) = match m.side {
                    Side::Left => (
                        a.mul(x, y).map(|xy| m.act_lc(xy, g.image(v))),
                        Some(m.act_lc(a.alpha.image(x), m.act(y, v))),
                    ),
                    Side::Right => (
                        a.mul(x, y).map(|xy| m.act_lc(xy, g.image(v))),
                        Some(m.act_lc(a.alpha.image(y), &m.act_lc(&LinComb::basis(x), &LinComb::basis(v)))),
                    ),
                };
                r.compare("module-assoc", &[x, y, v], lhs, rhs);
            }
        }
    }
    for v in 0..m.carrier_dim {
        r.compare("module-unit", &[v], Some(m.act_lc(&a.unit, &LinComb::basis(v))), Some(g.image(v).clone()));
    }
    r
}

/// Right Hom-comodule axioms: `(θ⊗Δ)∇ = (∇⊗β)∇` and `(Id⊗ε)∇ = θ`.
pub fn check_hom_comodule(c: &HomCoalgebraData, m: &CoactionData) -> CheckReport {
    let mut r = CheckReport::new();
    r.declare("comodule-coassoc");
    r.declare("comodule-counit");
    let f = c.filtration.as_ref();
    for v in 0..m.carrier_dim {
        let mut lhs = LinComb::zero();
        let mut rhs = LinComb::zero();
        for ((p, q), k) in m.table[v].iter() {
            for (tp, u) in m.theta.image(*p).iter() {
                for ((s, t), w) in c.comult[*q].iter() {
                    lhs.add_term((*tp, *s, *t), k * u * w);
                }
            }
            for ((s, t), w) in m.table[*p].iter() {
                for (bq, u) in c.beta.image(*q).iter() {
                    rhs.add_term((*s, *t, *bq), k * u * w);
                }
            }
        }
        let slots = [None, f, f];
        r.compare("comodule-coassoc", &[v], Some(truncate(lhs, &slots)), Some(truncate(rhs, &slots)));
        let mut counit = LinComb::zero();
        for ((p, q), k) in m.table[v].iter() {
            let e = &c.counit[*q];
            if !e.is_zero() {
                counit.add_term(*p, k * e);
            }
        }
        r.compare("comodule-counit", &[v], Some(counit), Some(m.theta.image(v).clone()));
    }
    r
}
