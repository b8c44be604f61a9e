use num_traits::{One, Zero};

use super::data::{HomAlgebraData, HomCoalgebraData, HomHopfData};
use crate::foundation::{solve_linear, LinComb, LinearOperator, Scalar};
use crate::report::CheckReport;

fn e(i: usize) -> LinComb<usize> {
    LinComb::basis(i)
}

/// Hom-associativity, unitality and multiplicativity of α, over all basis tuples.
pub fn check_hom_algebra(a: &HomAlgebraData) -> CheckReport {
    let mut r = CheckReport::new();
    for id in ["hom-assoc", "unit-left", "unit-right", "alpha-unit", "alpha-multiplicative"] {
        r.declare(id);
    }
    let n = a.dim;
    let al = &a.alpha;
    let t = |v: Option<LinComb<usize>>| v.map(|v| a.trunc(v, 1));
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = a.mul(y, z).and_then(|yz| a.mul_lc(al.image(x), yz));
                let rhs = a.mul(x, y).and_then(|xy| a.mul_lc(xy, al.image(z)));
                r.compare("hom-assoc", &[x, y, z], t(lhs), t(rhs));
            }
        }
    }
    for x in 0..n {
        let ax = Some(al.image(x).clone());
        r.compare("unit-left", &[x], t(a.mul_lc(&a.unit, &e(x))), ax.clone());
        r.compare("unit-right", &[x], t(a.mul_lc(&e(x), &a.unit)), ax);
    }
    r.compare("alpha-unit", &[], Some(al.apply(&a.unit)), Some(a.unit.clone()));
    for x in 0..n {
        for y in 0..n {
            let lhs = a.mul(x, y).map(|m| al.apply(m));
            let rhs = a.mul_lc(al.image(x), al.image(y));
            r.compare("alpha-multiplicative", &[x, y], t(lhs), t(rhs));
        }
    }
    r
}

/// Hom-coassociativity, counitality, and compatibility of ε and Δ with β.
pub fn check_hom_coalgebra(c: &HomCoalgebraData) -> CheckReport {
    let mut r = CheckReport::new();
    let n = c.dim;
    let b = &c.beta;
    for x in 0..n {
        let mut lhs = LinComb::zero();
        let mut rhs = LinComb::zero();
        for ((p, q), k) in c.comult[x].iter() {
            for (bp, u) in b.image(*p).iter() {
                for ((s, t), v) in c.comult[*q].iter() {
                    lhs.add_term((*bp, *s, *t), k * u * v);
                }
            }
            for ((s, t), v) in c.comult[*p].iter() {
                for (bq, u) in b.image(*q).iter() {
                    rhs.add_term((*s, *t, *bq), k * u * v);
                }
            }
        }
        r.compare("hom-coassoc", &[x], Some(c.trunc(lhs, 3)), Some(c.trunc(rhs, 3)));
    }
    for x in 0..n {
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((p, q), k) in c.comult[x].iter() {
            left.add_term(*q, k * &c.counit[*p]);
            right.add_term(*p, k * &c.counit[*q]);
        }
        r.compare("counit-left", &[x], Some(left), Some(b.image(x).clone()));
        r.compare("counit-right", &[x], Some(right), Some(b.image(x).clone()));
        r.compare_scalar("counit-beta", &[x], c.counit_lc(b.image(x)), c.counit[x].clone());
        let lhs = c.comult_lc(b.image(x));
        let rhs = b.apply_pair(b, &c.comult[x]);
        r.compare("comult-beta", &[x], Some(c.trunc(lhs, 2)), Some(c.trunc(rhs, 2)));
    }
    r
}

/// `Δ(a)·Δ(b)` computed factorwise in `H ⊗ H`.
pub fn tensor_square_mul(
    a: &HomAlgebraData,
    x: &LinComb<(usize, usize)>,
    y: &LinComb<(usize, usize)>,
) -> Option<LinComb<(usize, usize)>> {
    let mut out = LinComb::zero();
    for ((p, q), c) in x.iter() {
        for ((s, t), d) in y.iter() {
            let l = a.mul(*p, *s)?;
            let rr = a.mul(*q, *t)?;
            out.add_scaled(&crate::foundation::tensor(l, rr), &(c * d));
        }
    }
    Some(out)
}

/// The nine compatibility conditions between the algebra and coalgebra structures.
pub fn check_hom_bialgebra(h: &HomHopfData) -> CheckReport {
    let mut r = CheckReport::new();
    let (a, c) = (&h.alg, &h.coalg);
    let n = h.dim();
    let (al, be) = (&a.alpha, &c.beta);
    let t2 = |v: LinComb<(usize, usize)>| c.trunc(v, 2);
    let unit = &a.unit;
    r.compare(
        "bialg-1",
        &[],
        Some(t2(c.comult_lc(unit))),
        Some(t2(crate::foundation::tensor(unit, unit))),
    );
    for x in 0..n {
        for y in 0..n {
            let lhs = a.mul(x, y).map(|m| t2(c.comult_lc(m)));
            let rhs = tensor_square_mul(a, &c.comult[x], &c.comult[y]).map(t2);
            r.compare("bialg-2", &[x, y], lhs, rhs);
        }
    }
    for x in 0..n {
        let lhs = c.comult_lc(al.image(x));
        let rhs = al.apply_pair(al, &c.comult[x]);
        r.compare("bialg-3", &[x], Some(t2(lhs)), Some(t2(rhs)));
    }
    r.compare_scalar("bialg-4", &[], c.counit_lc(unit), Scalar::one());
    for x in 0..n {
        for y in 0..n {
            match a.mul(x, y) {
                Some(m) => {
                    r.compare_scalar("bialg-5", &[x, y], c.counit_lc(m), &c.counit[x] * &c.counit[y]);
                }
                None => r.skip("bialg-5"),
            }
        }
    }
    for x in 0..n {
        r.compare_scalar("bialg-6", &[x], c.counit_lc(al.image(x)), c.counit[x].clone());
    }
    r.compare("bialg-7", &[], Some(be.apply(unit)), Some(unit.clone()));
    for x in 0..n {
        for y in 0..n {
            let lhs = a.mul(x, y).map(|m| a.trunc(be.apply(m), 1));
            let rhs = a.mul_lc(be.image(x), be.image(y)).map(|m| a.trunc(m, 1));
            r.compare("bialg-8", &[x, y], lhs, rhs);
        }
    }
    for x in 0..n {
        let lhs = be.apply(al.image(x));
        let rhs = al.apply(be.image(x));
        r.compare("bialg-9", &[x], Some(lhs), Some(rhs));
    }
    r
}

/// Antipode axioms, plus the derived antipode properties as separate items.
pub fn check_hom_hopf(h: &HomHopfData) -> CheckReport {
    let mut r = CheckReport::new();
    let (a, c, s) = (&h.alg, &h.coalg, &h.antipode);
    let n = h.dim();
    let t1 = |v: Option<LinComb<usize>>| v.map(|v| a.trunc(v, 1));
    for x in 0..n {
        let target = Some(a.unit.scaled(&c.counit[x]));
        let mut left = Some(LinComb::zero());
        let mut right = Some(LinComb::zero());
        for ((p, q), k) in c.comult[x].iter() {
            left = left.and_then(|mut acc| {
                acc.add_scaled(&a.mul_lc(s.image(*p), &e(*q))?, k);
                Some(acc)
            });
            right = right.and_then(|mut acc| {
                acc.add_scaled(&a.mul_lc(&e(*p), s.image(*q))?, k);
                Some(acc)
            });
        }
        r.compare("antipode-left", &[x], t1(left), target.clone());
        r.compare("antipode-right", &[x], t1(right), target);
    }
    for x in 0..n {
        r.compare("antipode-alpha", &[x], Some(s.apply(a.alpha.image(x))), Some(a.alpha.apply(s.image(x))));
        r.compare("antipode-beta", &[x], Some(s.apply(c.beta.image(x))), Some(c.beta.apply(s.image(x))));
    }
    r.compare("derived-unit", &[], Some(s.apply(&a.unit)), Some(a.unit.clone()));
    for x in 0..n {
        r.compare_scalar("derived-counit", &[x], c.counit_lc(s.image(x)), c.counit[x].clone());
    }
    for x in 0..n {
        for y in 0..n {
            let lhs = a.mul(x, y).map(|m| s.apply(m));
            let rhs = a.mul_lc(s.image(y), s.image(x));
            r.compare("derived-anti-multiplicative", &[x, y], t1(lhs), t1(rhs));
        }
    }
    for x in 0..n {
        let lhs = c.comult_lc(s.image(x));
        let flipped = LinComb::from_terms(c.comult[x].iter().map(|((p, q), k)| ((*q, *p), k.clone())));
        let rhs = s.apply_pair(s, &flipped);
        r.compare("derived-anti-comultiplicative", &[x], Some(c.trunc(lhs, 2)), Some(c.trunc(rhs, 2)));
    }
    r
}

/// Algebra, coalgebra, bialgebra and antipode checks merged into one report.
pub fn check_hopf_suite(h: &HomHopfData) -> CheckReport {
    let mut r = check_hom_algebra(&h.alg);
    r.merge(check_hom_coalgebra(&h.coalg));
    r.merge(check_hom_bialgebra(h));
    r.merge(check_hom_hopf(h));
    r
}

/// Independently solves for the convolution inverse of the identity: the map `S'`
/// with `μ(S'⊗Id)(β⁻²⊗β⁻²)Δ = ηε = μ(Id⊗S')(β⁻²⊗β⁻²)Δ`.
///
/// Returns `None` when the system has no solution or more than one. On structures
/// with recorded degrees, `S'` is sought among degree non-increasing maps.
pub fn antipode_by_convolution(h: &HomHopfData) -> Option<LinearOperator> {
    let (a, c) = (&h.alg, &h.coalg);
    let n = h.dim();
    let var = |k: usize, i: usize| i * n + k;
    let allowed = |k: usize, i: usize| h.degrees.as_ref().map_or(true, |d| d[k] <= d[i]);
    let bm2 = c.beta_pow(-2);
    let mut eqs = Vec::new();
    for x in 0..n {
        let d = bm2.apply_pair(&bm2, &c.comult[x]);
        let mut left: Vec<LinComb<usize>> = vec![LinComb::zero(); n];
        let mut right: Vec<LinComb<usize>> = vec![LinComb::zero(); n];
        for ((p, q), coef) in d.iter() {
            for k in (0..n).filter(|k| allowed(*k, *p)) {
                let prod = a.mul(k, *q)?;
                for (m, v) in prod.iter() {
                    left[*m].add_term(var(k, *p), coef * v);
                }
            }
            for k in (0..n).filter(|k| allowed(*k, *q)) {
                let prod = a.mul(*p, k)?;
                for (m, v) in prod.iter() {
                    right[*m].add_term(var(k, *q), coef * v);
                }
            }
        }
        for m in 0..n {
            let rhs = &c.counit[x] * a.unit.coeff(&m);
            eqs.push((left[m].clone(), rhs.clone()));
            eqs.push((right[m].clone(), rhs));
        }
    }
    for i in 0..n {
        for k in (0..n).filter(|k| !allowed(*k, i)) {
            eqs.push((LinComb::basis(var(k, i)), Scalar::zero()));
        }
    }
    let sol = solve_linear(&eqs, n * n)?;
    if sol.nullity != 0 {
        return None;
    }
    let images = (0..n)
        .map(|i| LinComb::from_terms((0..n).map(|k| (k, sol.values[var(k, i)].clone()))))
        .collect();
    LinearOperator::new(n, images).ok()
}
