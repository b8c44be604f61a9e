//! Module (co)algebra and comodule (co)algebra compatibilities.

use crate::foundation::{tensor, LinComb};
use crate::hom_core::{truncate, ActionData, CoactionData, HomAlgebraData, HomCoalgebraData, HomHopfData};
use crate::report::CheckReport;

use super::{e, pw};

/// `A` as a left `H`-module algebra: `mod-alg-00` `α(h▷a) = ψ(h)▷α(a)`,
/// `mod-alg-I` `ψ²(h)▷(a•a') = (h₁▷a)•(h₂▷a')`, `mod-alg-II` `h▷η = ε(h)η`.
pub fn check_module_algebra(h: &HomHopfData, a: &HomAlgebraData, act: &ActionData) -> CheckReport {
    let mut r = CheckReport::new();
    for id in ["mod-alg-00", "mod-alg-I", "mod-alg-II"] {
        r.declare(id);
    }
    let psi = h.beta();
    let psi2 = pw(psi, 2);
    for x in 0..h.dim() {
        for m in 0..a.dim {
            let lhs = a.alpha.apply(act.act(x, m));
            let rhs = act.act_lc(psi.image(x), a.alpha.image(m));
            r.compare("mod-alg-00", &[x, m], Some(lhs), Some(rhs));
        }
    }
    for x in 0..h.dim() {
        for m in 0..a.dim {
            for n in 0..a.dim {
                let lhs = a.mul(m, n).map(|p| act.act_lc(psi2.image(x), p));
                let mut rhs = Some(LinComb::zero());
                for ((p, q), c) in h.coalg.comult[x].iter() {
                    rhs = rhs.and_then(|mut acc| {
                        acc.add_scaled(&a.mul_lc(act.act(*p, m), act.act(*q, n))?, c);
                        Some(acc)
                    });
                }
                r.compare("mod-alg-I", &[x, m, n], lhs.map(|v| a.trunc(v, 1)), rhs.map(|v| a.trunc(v, 1)));
            }
        }
    }
    for x in 0..h.dim() {
        let lhs = act.act_lc(&e(x), &a.unit);
        r.compare("mod-alg-II", &[x], Some(lhs), Some(a.unit.scaled(&h.coalg.counit[x])));
    }
    r
}

/// `C` as an `H`-module coalgebra, on either side:
/// `mod-coalg-00` `β(h▷c) = ψ(h)▷β(c)`, `mod-coalg-I` `Δ(h▷c) = h₁▷c₁ ⊗ h₂▷c₂`,
/// `mod-coalg-II` `ε(h▷c) = ε(h)ε(c)`. For a right action read `c◁h` throughout.
pub fn check_module_coalgebra(h: &HomHopfData, c: &HomCoalgebraData, act: &ActionData) -> CheckReport {
    let mut r = CheckReport::new();
    for id in ["mod-coalg-00", "mod-coalg-I", "mod-coalg-II"] {
        r.declare(id);
    }
    let psi = h.beta();
    for x in 0..h.dim() {
        for m in 0..c.dim {
            let lhs = c.beta.apply(act.act(x, m));
            let rhs = act.act_lc(psi.image(x), c.beta.image(m));
            r.compare("mod-coalg-00", &[x, m], Some(lhs), Some(rhs));

            let lhs = c.comult_lc(act.act(x, m));
            let mut rhs = LinComb::zero();
            for ((p, q), k) in h.coalg.comult[x].iter() {
                for ((s, t), l) in c.comult[m].iter() {
                    rhs.add_scaled(&tensor(act.act(*p, *s), act.act(*q, *t)), &(k * l));
                }
            }
            r.compare("mod-coalg-I", &[x, m], Some(c.trunc(lhs, 2)), Some(c.trunc(rhs, 2)));

            let lhs = c.counit_lc(act.act(x, m));
            r.compare_scalar("mod-coalg-II", &[x, m], lhs, &h.coalg.counit[x] * &c.counit[m]);
        }
    }
    r
}

/// `A` as a right `H`-comodule algebra: `comod-alg-00` `α(a)₀⊗α(a)₁ = α(a₀)⊗φ(a₁)`,
/// `comod-alg-I` `∇(a•a') = a₀•a'₀ ⊗ a₁•a'₁`, `comod-alg-II` `∇(η) = η⊗η`.
pub fn check_comodule_algebra(h: &HomHopfData, a: &HomAlgebraData, co: &CoactionData) -> CheckReport {
    let mut r = CheckReport::new();
    for id in ["comod-alg-00", "comod-alg-I", "comod-alg-II"] {
        r.declare(id);
    }
    let phi = h.alpha();
    let slots = [a.filtration.as_ref(), h.alg.filtration.as_ref()];
    for m in 0..a.dim {
        let lhs = co.coact_lc(a.alpha.image(m));
        let rhs = a.alpha.apply_pair(phi, &co.table[m]);
        r.compare("comod-alg-00", &[m], Some(lhs), Some(rhs));
    }
    for m in 0..a.dim {
        for n in 0..a.dim {
            let lhs = a.mul(m, n).map(|p| co.coact_lc(p));
            let mut rhs = Some(LinComb::zero());
            for ((p, x), c) in co.table[m].iter() {
                for ((q, y), d) in co.table[n].iter() {
                    rhs = rhs.and_then(|mut acc| {
                        acc.add_scaled(&tensor(&a.mul(*p, *q)?.clone(), h.alg.mul(*x, *y)?), &(c * d));
                        Some(acc)
                    });
                }
            }
            r.compare("comod-alg-I", &[m, n], lhs.map(|v| truncate(v, &slots)), rhs.map(|v| truncate(v, &slots)));
        }
    }
    r.compare("comod-alg-II", &[], Some(co.coact_lc(&a.unit)), Some(tensor(&a.unit, h.unit())));
    r
}

/// `C` as a right `H`-comodule coalgebra: `comod-coalg-00` `β(c)₀⊗β(c)₁ = β(c₀)⊗φ(c₁)`,
/// `comod-coalg-I` `c₀₍₁₎⊗c₀₍₂₎⊗φ²(c₁) = c₍₁₎₀⊗c₍₂₎₀⊗c₍₁₎₁•c₍₂₎₁`,
/// `comod-coalg-II` `ε(c₀)c₁ = ε(c)η`.
pub fn check_comodule_coalgebra(h: &HomHopfData, c: &HomCoalgebraData, co: &CoactionData) -> CheckReport {
    let mut r = CheckReport::new();
    for id in ["comod-coalg-00", "comod-coalg-I", "comod-coalg-II"] {
        r.declare(id);
    }
    let phi = h.alpha();
    let phi2 = pw(phi, 2);
    let cf = c.filtration.as_ref();
    let slots = [cf, cf, None];
    for m in 0..c.dim {
        let lhs = co.coact_lc(c.beta.image(m));
        let rhs = c.beta.apply_pair(phi, &co.table[m]);
        r.compare("comod-coalg-00", &[m], Some(lhs), Some(rhs));

        let mut lhs = LinComb::zero();
        for ((p, x), k) in co.table[m].iter() {
            for ((s, t), l) in c.comult[*p].iter() {
                for (y, f) in phi2.image(*x).iter() {
                    lhs.add_term((*s, *t, *y), k * l * f);
                }
            }
        }
        let mut rhs = Some(LinComb::zero());
        for ((s, t), k) in c.comult[m].iter() {
            for ((s0, x), l) in co.table[*s].iter() {
                for ((t0, y), f) in co.table[*t].iter() {
                    rhs = rhs.and_then(|mut acc| {
                        for (z, g) in h.alg.mul(*x, *y)?.iter() {
                            acc.add_term((*s0, *t0, *z), k * l * f * g);
                        }
                        Some(acc)
                    });
                }
            }
        }
        r.compare("comod-coalg-I", &[m], Some(truncate(lhs, &slots)), rhs.map(|v| truncate(v, &slots)));

        let mut lhs = LinComb::zero();
        for ((p, x), k) in co.table[m].iter() {
            lhs.add_term(*x, k * &c.counit[*p]);
        }
        r.compare("comod-coalg-II", &[m], Some(lhs), Some(h.unit().scaled(&c.counit[m])));
    }
    r
}
