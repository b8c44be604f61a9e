use homhopf_core::fixtures::*;
use homhopf_core::foundation::{int, LinComb, LinearOperator};
use homhopf_core::hom_core::{ActionData, Side};
use homhopf_core::hom_lie::*;
use homhopf_core::Error;
use proptest::prelude::*;

#[test]
fn sl2_and_abelian_pass() {
    assert!(check_hom_lie(&sl2()).passed());
    let phi = LinearOperator::from_matrix(&[vec![int(2), int(1)], vec![int(0), int(3)]]).unwrap();
    assert!(check_hom_lie(&HomLieData::abelian(2, phi).unwrap()).passed());
}

#[test]
fn perturbed_sl2_fails_jacobi_with_witness() {
    let mut g = sl2();
    // [h,e] = 3e instead of 2e
    g.bracket[2 * 3] = LinComb::term(0, int(3));
    g.bracket[2] = LinComb::term(0, int(-3));
    let r = check_hom_lie(&g);
    assert_eq!(r.failed_ids(), vec!["hom-jacobi"]);
    let v = r.violations().next().unwrap();
    assert_eq!(v.witness, vec![0, 1, 2]);
    assert_eq!(v.lhs, vec![(vec![2], int(-1))]);
    assert!(v.rhs.is_empty());
}

#[test]
fn lie_twists() {
    let t = lie_twist(&sl2(), &sl2_sign_automorphism()).unwrap();
    assert!(check_hom_lie(&t).passed());
    assert_eq!(t.br(2, 0), &LinComb::term(0, int(-2)));
    let same = lie_twist(&sl2(), &LinearOperator::identity(3)).unwrap();
    assert_eq!(same, sl2());
    let minus = LinearOperator::scalar(2, &int(-1));
    let ab = lie_twist(&HomLieData::abelian(2, LinearOperator::identity(2)).unwrap(), &minus).unwrap();
    assert!(ab.bracket.iter().all(|b| b.is_zero()));
    assert!(ab.phi.same_action(&minus));
    // scaling e by 2 is not a Lie endomorphism of sl2
    let bad = LinearOperator::new(3, vec![LinComb::term(0, int(2)), LinComb::basis(1), LinComb::basis(2)]).unwrap();
    assert_eq!(lie_twist(&sl2(), &bad), Err(Error::NotLieEndomorphism));
}

#[test]
fn commutator_algebras() {
    let g = commutator_hom_lie(&upper_triangular_twisted()).unwrap();
    assert!(check_hom_lie(&g).passed());
    // [E11, E12] = conjugated E12 = −E12
    assert_eq!(g.br(0, 1), &LinComb::term(1, int(-1)));
    let c = commutator_hom_lie(&kz4_twisted().alg).unwrap();
    assert!(c.bracket.iter().all(|b| b.is_zero()));
    let k = commutator_hom_lie(&trivial_hopf().alg).unwrap();
    assert!(k.bracket[0].is_zero());
}

#[test]
fn lie_modules() {
    assert!(check_lie_module(&sl2(), &adjoint_action(&sl2())).passed());
    let zero = ActionData::from_fn(Side::Left, 3, 2, LinearOperator::identity(2), |_, _| LinComb::zero()).unwrap();
    assert!(check_lie_module(&sl2(), &zero).passed());
    let mut bad = adjoint_action(&sl2());
    bad.gamma = sl2_sign_automorphism();
    let r = check_lie_module(&sl2(), &bad);
    assert!(!r.item_passed("lie-module-twist"));
    let tw = lie_twist(&sl2(), &sl2_sign_automorphism()).unwrap();
    assert!(check_lie_module(&tw, &adjoint_action(&tw)).passed());
}

#[test]
fn fixture_b_double_sum_is_solvable_algebra() {
    let p = fixture_b();
    assert!(check_matched_pair_lie(&p).passed());
    let d = build_double_sum_lie(&p).unwrap();
    // basis (y, x): [x, y] = y
    assert_eq!(d.br(1, 0), &LinComb::basis(0));
    assert!(check_hom_lie(&d).passed());
}

#[test]
fn trivial_actions_and_hom_fixtures_pass() {
    for p in [fixture_a_prime(), fixture_b_twisted()] {
        assert!(check_matched_pair_lie(&p).passed(), "{:?}", check_matched_pair_lie(&p).failed_ids());
        assert!(check_hom_lie(&build_double_sum_lie(&p).unwrap()).passed());
    }
    let d = build_double_sum_lie(&fixture_b_twisted()).unwrap();
    assert_eq!(d.br(1, 0), &LinComb::term(0, int(-1)));
}

#[test]
fn failing_pairs_name_the_equation() {
    let r = check_matched_pair_lie(&two_by_one_pair(1));
    assert_eq!(r.failed_ids(), vec!["matched-pair-lie-I"]);
    let r = check_matched_pair_lie(&one_by_two_pair(1));
    assert_eq!(r.failed_ids(), vec!["matched-pair-lie-II"]);
    assert_eq!(
        build_double_sum_lie(&one_by_two_pair(1)),
        Err(Error::NotMatchedPair("matched-pair-lie-II".into()))
    );
}

#[test]
fn double_sum_is_hom_lie_iff_matched() {
    let mut cases = vec![fixture_b(), fixture_b_twisted(), fixture_a_prime()];
    for k in -2..=2 {
        cases.push(two_by_one_pair(k));
        cases.push(one_by_two_pair(k));
    }
    for p in cases {
        let matched = check_matched_pair_lie(&p).passed();
        let lie = check_hom_lie(&double_sum_lie_unchecked(&p).unwrap()).passed();
        assert_eq!(matched, lie);
    }
}

proptest! {
    #[test]
    fn twisting_abelian_by_any_invertible_map(a in -3i64..4, b in -3i64..4, c in -3i64..4, d in -3i64..4) {
        prop_assume!(a * d - b * c != 0);
        let t = LinearOperator::from_matrix(&[vec![int(a), int(b)], vec![int(c), int(d)]]).unwrap();
        let g = lie_twist(&HomLieData::abelian(2, LinearOperator::identity(2)).unwrap(), &t).unwrap();
        prop_assert!(check_hom_lie(&g).passed());
    }

    #[test]
    fn rescaling_sl2_by_torus_elements(s in 1i64..5, neg in any::<bool>()) {
        // e ↦ ±s e, f ↦ ±s⁻¹ f, h ↦ h
        let sign = if neg { -1 } else { 1 };
        let t = LinearOperator::new(3, vec![
            LinComb::term(0, int(sign * s)),
            LinComb::term(1, homhopf_core::foundation::frac(sign, s)),
            LinComb::basis(2),
        ]).unwrap();
        let g = lie_twist(&sl2(), &t).unwrap();
        prop_assert!(check_hom_lie(&g).passed());
        prop_assert!(check_lie_module(&g, &adjoint_action(&g)).passed());
    }
}
