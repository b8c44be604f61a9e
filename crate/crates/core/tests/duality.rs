use homhopf_core::duality::*;
use homhopf_core::fixtures::*;
use homhopf_core::foundation::{int, LinComb, LinearOperator};
use homhopf_core::hom_core::*;

fn kfield() -> HomAlgebraData {
    trivial_hopf().alg
}

#[test]
fn dual_of_twisted_group_algebra_is_hom_hopf() {
    let h = kz4_twisted();
    let d = dual_hom_hopf(&h).unwrap();
    let r = check_hopf_suite(&d);
    assert!(r.passed(), "{:?}", r.failed_ids());
    assert!(d.alpha().same_action(&h.beta().invert().unwrap().transpose()));
}

#[test]
fn dual_of_sweedler_and_group_like_bialgebra() {
    for h in [sweedler(), group_like_hom_bialgebra(3, &cyclic_power_map(3, 2).invertible().unwrap())] {
        let d = dual_hom_hopf(&h).unwrap();
        assert!(check_hopf_suite(&h).passed());
        assert!(check_hopf_suite(&d).passed(), "{:?}", check_hopf_suite(&d).failed_ids());
    }
}

#[test]
fn double_dual_recovers_tables() {
    for h in [kz4_twisted(), sweedler(), group_like_hom_bialgebra(4, &cyclic_inversion(4))] {
        let dd = dual_hom_hopf(&dual_hom_hopf(&h).unwrap()).unwrap();
        assert_eq!(dd.alg.mult, h.alg.mult);
        assert_eq!(dd.alg.unit, h.alg.unit);
        assert_eq!(dd.coalg.comult, h.coalg.comult);
        assert_eq!(dd.coalg.counit, h.coalg.counit);
        assert!(dd.alpha().same_action(h.alpha()));
        assert!(dd.beta().same_action(h.beta()));
        assert!(dd.antipode.same_action(&h.antipode));
    }
}

#[test]
fn dual_algebra_matches_convolution_into_ground_field() {
    for c in [matrix_coalgebra(), kz4_twisted().coalg, group_like_hom_bialgebra(3, &cyclic_power_map(3, 2)).coalg] {
        let direct = dual_algebra_of_coalgebra(&c).unwrap();
        let conv = convolution_algebra(&c, &kfield()).unwrap();
        assert_eq!(direct.mult, conv.mult);
        assert_eq!(direct.unit, conv.unit);
        assert!(direct.alpha.same_action(&conv.alpha));
        assert!(check_hom_algebra(&direct).passed());
    }
}

#[test]
fn dual_coalgebra_of_twisted_upper_triangular() {
    let a = upper_triangular_twisted();
    let c = dual_coalgebra_of_algebra(&a).unwrap();
    assert!(check_hom_coalgebra(&c).passed());
}

#[test]
fn convolution_inverse_of_identity_is_antipode() {
    for h in [kz4_twisted(), sweedler(), group_like_hom_bialgebra(4, &cyclic_inversion(4))] {
        let n = h.dim();
        let conv = convolution_algebra(&h.coalg, &h.alg).unwrap();
        assert!(check_hom_algebra(&conv).passed());
        // identity map as an element: e_i ↦ e_i
        let id = LinComb::from_terms((0..n).map(|i| (i * n + i, int(1))));
        let (y, k) = hom_inverse(&conv, &id, HOM_INVERSE_BOUND).expect("inverse");
        assert_eq!(k, 0);
        let images = (0..n)
            .map(|i| LinComb::from_terms((0..n).map(|m| (m, y.coeff(&(i * n + m))))))
            .collect();
        let s = LinearOperator::new(n, images).unwrap();
        assert!(s.same_action(&h.antipode));
    }
}

#[test]
fn coregular_actions_are_hom_modules_and_commute() {
    for a in [kz4_twisted().alg, upper_triangular_twisted(), sweedler().alg] {
        let (l, r) = coregular_actions(&a).unwrap();
        assert!(check_hom_module(&a, &l).passed());
        assert!(check_hom_module(&a, &r).passed());
        let n = a.dim;
        for x in 0..n {
            for y in 0..n {
                for f in 0..n {
                    let lhs = l.act_lc(a.alpha.image(x), &r.act_lc(&LinComb::basis(y), &LinComb::basis(f)));
                    let rhs = r.act_lc(a.alpha.image(y), l.act(x, f));
                    assert_eq!(lhs, rhs, "{x} {y} {f}");
                }
            }
        }
    }
}
