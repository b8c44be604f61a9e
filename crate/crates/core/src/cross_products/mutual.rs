//! Mutual pairs of Hom-Hopf algebras and their bicrossproducts.

use super::symmetries::{check_comodule_coalgebra, check_module_algebra};
use super::{e, pw};
use crate::error::{Error, Result};
use crate::foundation::{tensor, LinComb, LinearOperator};
use crate::hom_core::{
    check_hom_comodule, check_hom_module, truncate, ActionData, CoactionData, Filtration, HomAlgebraData,
    HomCoalgebraData, HomHopfData, Side,
};
use crate::report::CheckReport;

/// `(F, U)` with a left action `▷: U⊗F → F` (carrier map `β`) and a right coaction
/// `∇: U → U⊗F` (carrier map `φ`).
///
/// `F` has twists `α` (algebra) and `β` (coalgebra), `U` has `φ` and `ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutualPairHopf {
    pub f: HomHopfData,
    pub u: HomHopfData,
    pub action: ActionData,
    pub coaction: CoactionData,
}

impl MutualPairHopf {
    pub fn new(f: HomHopfData, u: HomHopfData, action: ActionData, coaction: CoactionData) -> Result<Self> {
        let ok = action.side == Side::Left
            && action.acting_dim == u.dim()
            && action.carrier_dim == f.dim()
            && coaction.carrier_dim == u.dim()
            && coaction.coalg_dim == f.dim();
        if !ok {
            return Err(Error::DimensionMismatch { expected: u.dim() * f.dim(), found: action.table.len() });
        }
        Ok(MutualPairHopf { f, u, action, coaction })
    }

    /// Trivial structure: `u▷f = ε(u)β(f)` and `∇(u) = φ(u)⊗1`.
    pub fn trivial(f: HomHopfData, u: HomHopfData) -> Result<Self> {
        let action = ActionData::from_fn(Side::Left, u.dim(), f.dim(), f.beta().clone(), |x, m| {
            f.beta().image(m).scaled(&u.coalg.counit[x])
        })?;
        let table = (0..u.dim()).map(|x| tensor(u.alpha().image(x), f.unit())).collect();
        let coaction = CoactionData::new(u.dim(), f.dim(), table, u.alpha().clone())?;
        Self::new(f, u, action, coaction)
    }

    /// `u ▷ f` on combinations.
    pub fn act(&self, u: &LinComb<usize>, f: &LinComb<usize>) -> LinComb<usize> {
        self.action.act_lc(u, f)
    }
}

/// Module-algebra and comodule-coalgebra axioms (prefixed `action/` and `coaction/`),
/// `rt-f-comp`, `lt-f-comp` and the cross relations `comp-I` to `comp-IV`.
/// Tensor components beyond a recorded filtration bound of `F` are ignored.
pub fn check_mutual_pair(m: &MutualPairHopf) -> CheckReport {
    let mut r = CheckReport::new();
    let mut a = check_hom_module(&m.u.alg, &m.action);
    a.merge(check_module_algebra(&m.u, &m.f.alg, &m.action));
    r.merge_prefixed("action/", a);
    let mut c = check_hom_comodule(&m.f.coalg, &m.coaction);
    c.merge(check_comodule_coalgebra(&m.f, &m.u.coalg, &m.coaction));
    r.merge_prefixed("coaction/", c);
    for id in ["rt-f-comp", "lt-f-comp", "comp-I", "comp-II", "comp-III", "comp-IV"] {
        r.declare(id);
    }
    let (f, u) = (&m.f, &m.u);
    let (alpha, beta) = (f.alpha(), f.beta());
    let (phi, psi) = (u.alpha(), u.beta());
    let (df, du) = (f.dim(), u.dim());
    let ff = f.filtration();
    let t_ff = |x: LinComb<(usize, usize)>| truncate(x, &[ff, ff]);
    let co = &m.coaction.table;

    for x in 0..du {
        for k in 0..df {
            let lhs = beta.apply(&m.act(&e(x), &e(k)));
            let rhs = m.act(phi.image(x), beta.image(k));
            r.compare("rt-f-comp", &[x, k], Some(lhs), Some(rhs));
        }
        let lhs = m.coaction.coact_lc(phi.image(x));
        let rhs = phi.apply_pair(beta, &co[x]);
        r.compare("lt-f-comp", &[x], Some(lhs), Some(rhs));
    }

    let psi_m1 = pw(psi, -1);
    let a4b3 = pw(alpha, -4).compose(&pw(beta, 3));
    let phi_psi_m2 = phi.compose(&pw(psi, -2));
    let alpha_m1 = pw(alpha, -1);
    let a2b = pw(alpha, -2).compose(beta);
    let phi_m1 = pw(phi, -1);
    let a2b2 = pw(alpha, -2).compose(&pw(beta, 2));

    for x in 0..du {
        for k in 0..df {
            let lhs = f.coalg.comult_lc(&m.act(&e(x), &e(k)));
            let mut rhs = LinComb::zero();
            for ((x1, x2), c) in u.coalg.comult[x].iter() {
                for ((x10, x11), d) in co[*x1].iter() {
                    for ((k1, k2), g) in f.coalg.comult[k].iter() {
                        let first = m.act(psi_m1.image(*x10), &e(*k1));
                        let acted = m.act(phi_psi_m2.image(*x2), alpha_m1.image(*k2));
                        let second = f.alg.mul_lc(a4b3.image(*x11), &acted).expect("the dual algebra is total");
                        rhs.add_scaled(&tensor(&first, &second), &(c * d * g));
                    }
                }
            }
            r.compare("comp-I", &[x, k], Some(t_ff(lhs)), Some(t_ff(rhs)));

            let lhs = f.coalg.counit_lc(&m.act(&e(x), &e(k)));
            r.compare_scalar("comp-II", &[x, k], lhs, &u.coalg.counit[x] * &f.coalg.counit[k]);
        }
    }

    for x in 0..du {
        for x2 in 0..du {
            let lhs = u.alg.mul(x, x2).map(|p| m.coaction.coact_lc(p));
            let mut rhs = Some(LinComb::zero());
            for ((y1, y2), c) in u.coalg.comult[x].iter() {
                for ((y10, y11), d) in co[*y1].iter() {
                    for ((z0, z1), g) in co[x2].iter() {
                        rhs = rhs.and_then(|mut acc| {
                            let left = u.alg.mul_lc(psi_m1.image(*y10), &e(*z0))?;
                            let acted = m.act(phi_m1.image(*y2), alpha_m1.image(*z1));
                            let right = f.alg.mul_lc(a2b.image(*y11), &acted)?;
                            acc.add_scaled(&tensor(&left, &right), &(c * d * g));
                            Some(acc)
                        });
                    }
                }
            }
            r.compare("comp-III", &[x, x2], lhs, rhs);
        }
    }

    for x in 0..du {
        for k in 0..df {
            let mut lhs = Some(LinComb::zero());
            let mut rhs = Some(LinComb::zero());
            for ((x1, x2), c) in u.coalg.comult[x].iter() {
                for ((y0, y1), d) in co[*x1].iter() {
                    lhs = lhs.and_then(|mut acc| {
                        let right = f.alg.mul_lc(a2b2.image(*y1), &m.act(&e(*x2), &e(k)))?;
                        acc.add_scaled(&tensor(&e(*y0), &right), &(c * d));
                        Some(acc)
                    });
                }
                for ((y0, y1), d) in co[*x2].iter() {
                    rhs = rhs.and_then(|mut acc| {
                        let right = f.alg.mul_lc(&m.act(&e(*x1), &e(k)), a2b2.image(*y1))?;
                        acc.add_scaled(&tensor(&e(*y0), &right), &(c * d));
                        Some(acc)
                    });
                }
            }
            r.compare("comp-IV", &[x, k], lhs, rhs);
        }
    }
    r
}

/// The bicrossproduct on `F⊗U`, refusing pairs that fail any mutual-pair equation.
pub fn build_bicrossproduct(m: &MutualPairHopf) -> Result<HomHopfData> {
    let report = check_mutual_pair(m);
    if let Some(id) = report.failed_ids().first() {
        return Err(Error::NotMutualPair(id.to_string()));
    }
    bicrossproduct_unchecked(m)
}

/// The bicrossproduct tables on the basis `f_i ⊗ u_j` (index `i * dim U + j`) without
/// checking the mutual-pair equations.
///
/// Product `(f,u)∗(f',u') = (α⁻¹β(f)⋆(φ⁻¹ψ⁻¹(u₁)▷α⁻¹(f')), ψ⁻¹(u₂)•u')`,
/// coproduct `(αβ⁻¹(f₁), φ⁻¹(u₁₀)) ⊗ (β⁻¹(f₂)⋆α⁻²(u₁₁), u₂)`, algebra twist `β⊗φ`,
/// coalgebra twist `α⊗ψ`, antipode `(1, S(φ⁻²u₀)) ∗ (S(α⁻¹β⁻¹(f)⋆α⁻²β⁻¹(u₁)), 1)`.
pub fn bicrossproduct_unchecked(m: &MutualPairHopf) -> Result<HomHopfData> {
    let (f, u) = (&m.f, &m.u);
    let (alpha, beta) = (f.alpha(), f.beta());
    let (phi, psi) = (u.alpha(), u.beta());
    let (df, du) = (f.dim(), u.dim());
    let dim = df * du;
    let idx = |i: usize, j: usize| i * du + j;
    let place = |x: &LinComb<usize>, y: &LinComb<usize>| tensor(x, y).map(|(a, b)| e(idx(*a, *b)));
    let co = &m.coaction.table;

    let a1b = pw(alpha, -1).compose(beta);
    let pp_m1 = pw(phi, -1).compose(&pw(psi, -1));
    let alpha_m1 = pw(alpha, -1);
    let psi_m1 = pw(psi, -1);
    let mut mult = Vec::with_capacity(dim * dim);
    for k in 0..df {
        for x in 0..du {
            for k2 in 0..df {
                for x2 in 0..du {
                    let mut out = Some(LinComb::zero());
                    for ((x1, x12), c) in u.coalg.comult[x].iter() {
                        out = out.and_then(|mut acc| {
                            let acted = m.act(pp_m1.image(*x1), alpha_m1.image(k2));
                            let left = f.alg.mul_lc(a1b.image(k), &acted)?;
                            let right = u.alg.mul_lc(psi_m1.image(*x12), &e(x2))?;
                            acc.add_scaled(&place(&left, &right), c);
                            Some(acc)
                        });
                    }
                    mult.push(out);
                }
            }
        }
    }
    let unit = place(f.unit(), u.unit());
    let alg_twist = crate::foundation::tensor_operator(beta, phi);
    let alg = HomAlgebraData::new(dim, mult, unit, alg_twist)?;

    let ab_m1 = alpha.compose(&pw(beta, -1));
    let phi_m1 = pw(phi, -1);
    let beta_m1 = pw(beta, -1);
    let alpha_m2 = pw(alpha, -2);
    let mut comult = Vec::with_capacity(dim);
    for k in 0..df {
        for x in 0..du {
            let mut d = LinComb::zero();
            for ((k1, k2), c) in f.coalg.comult[k].iter() {
                for ((x1, x12), g) in u.coalg.comult[x].iter() {
                    for ((y0, y1), h) in co[*x1].iter() {
                        let first = place(ab_m1.image(*k1), phi_m1.image(*y0));
                        let fpart = f.alg.mul_lc(beta_m1.image(*k2), alpha_m2.image(*y1)).expect("the dual algebra is total");
                        let second = place(&fpart, &e(*x12));
                        d.add_scaled(&tensor(&first, &second), &(c * g * h));
                    }
                }
            }
            comult.push(d);
        }
    }
    let counit = (0..dim).map(|i| &f.coalg.counit[i / du] * &u.coalg.counit[i % du]).collect();
    let co_twist = crate::foundation::tensor_operator(alpha, psi);
    let coalg = HomCoalgebraData::new(dim, comult, counit, co_twist)?;

    let phi_m2 = pw(phi, -2);
    let ab_mm = pw(alpha, -1).compose(&pw(beta, -1));
    let a2b_m1 = pw(alpha, -2).compose(&pw(beta, -1));
    let mut s_images = Vec::with_capacity(dim);
    for k in 0..df {
        for x in 0..du {
            let mut s = LinComb::zero();
            for ((y0, y1), c) in co[x].iter() {
                let left = place(f.unit(), &u.antipode.apply(phi_m2.image(*y0)));
                let prod = f.alg.mul_lc(ab_mm.image(k), a2b_m1.image(*y1)).expect("the dual algebra is total");
                let right = place(&f.antipode.apply(&prod), u.unit());
                let term = alg.mul_lc(&left, &right).ok_or(Error::TruncationOverflow {
                    degree: u.degrees.as_ref().map_or(0, |d| d[x]),
                    bound: u.filtration().map_or(0, |f| f.bound),
                })?;
                s.add_scaled(&term, c);
            }
            s_images.push(s);
        }
    }
    let antipode = LinearOperator::new(dim, s_images)?;
    let mut out = HomHopfData::new(alg, coalg, antipode)?;
    if let Some(fl) = f.filtration() {
        let degree = (0..dim).map(|i| fl.degree[i / du]).collect();
        out = out.with_filtration(Filtration { degree, bound: fl.bound });
    }
    if let (Some(a), Some(b)) = (&f.degrees, &u.degrees) {
        out.degrees = Some((0..dim).map(|i| a[i / du] + b[i % du]).collect());
    }
    out.labels = Some((0..dim).map(|i| format!("{}⊗{}", f.label(i / du), u.label(i % du))).collect());
    Ok(out)
}
